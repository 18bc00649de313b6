#ifndef TILT_ANALYSIS_HPP
#define TILT_ANALYSIS_HPP

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "tilt/graph.hpp"

namespace tilt {

// Biconnected components. Edges are referred to by their index in
// g.edges(); parallel edges are distinct instances and land in one block.
struct Block {
    std::vector<int> edge_indices;
    std::vector<int> vertex_indices;  // sorted

    bool is_single_edge() const { return edge_indices.size() == 1; }
};

struct BlockDecomposition {
    std::vector<Block> blocks;
    std::vector<int> cut_vertices;  // sorted
};

inline BlockDecomposition block_decomposition(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge idx)
    for (int e = 0; e < m; e++) {
        auto [u, v] = g.edges()[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }

    BlockDecomposition out;
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<int> edge_stack;
    std::set<int> cuts;
    int timer = 0;

    // iterative Tarjan; parallel edges are separate instances, only the
    // exact tree edge used to enter a vertex is skipped
    struct Frame {
        int v, parent_edge;
        size_t next;
    };
    for (int root = 0; root < n; root++) {
        if (disc[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, 0}};
        disc[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < adj[f.v].size()) {
                auto [w, e] = adj[f.v][f.next++];
                if (e == f.parent_edge) continue;
                if (disc[w] == -1) {
                    edge_stack.push_back(e);
                    disc[w] = low[w] = timer++;
                    if (f.v == root) root_children++;
                    stack.push_back({w, e, 0});
                } else if (disc[w] < disc[f.v]) {
                    edge_stack.push_back(e);
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v;
                int pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                int parent = stack.back().v;
                low[parent] = std::min(low[parent], low[v]);
                if (low[v] >= disc[parent]) {
                    // pop one block ending at the tree edge pe
                    Block b;
                    int e;
                    do {
                        e = edge_stack.back();
                        edge_stack.pop_back();
                        b.edge_indices.push_back(e);
                    } while (e != pe);
                    std::set<int> vs;
                    for (int ei : b.edge_indices) {
                        vs.insert(g.edges()[ei].first);
                        vs.insert(g.edges()[ei].second);
                    }
                    b.vertex_indices.assign(vs.begin(), vs.end());
                    out.blocks.push_back(std::move(b));
                    if (parent != root) cuts.insert(parent);
                }
            }
        }
        if (root_children >= 2) cuts.insert(root);
    }
    out.cut_vertices.assign(cuts.begin(), cuts.end());
    return out;
}

namespace detail {

// True iff the block is a simple cycle (every vertex degree 2 within the
// block and #edges == #vertices). A double edge counts: 2 vertices, 2 edges.
inline bool block_is_cycle(const Graph& g, const Block& b) {
    if (b.edge_indices.size() != b.vertex_indices.size()) return false;
    std::map<int, int> deg;
    for (int e : b.edge_indices) {
        deg[g.edges()[e].first]++;
        deg[g.edges()[e].second]++;
    }
    for (auto [v, d] : deg)
        if (d != 2) return false;
    return true;
}

// Vertex sequence of a cycle block in cyclic order.
inline std::vector<int> cycle_order(const Graph& g, const Block& b) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (w, edge idx)
    for (int e : b.edge_indices) {
        auto [u, v] = g.edges()[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    std::vector<int> seq;
    int start = b.vertex_indices.front();
    int cur = start, prev_edge = -1;
    do {
        seq.push_back(cur);
        for (auto [w, e] : adj[cur])
            if (e != prev_edge) {
                prev_edge = e;
                cur = w;
                break;
            }
    } while (cur != start);
    return seq;
}

// In a biconnected non-cycle block, find an even cycle via one base cycle
// and an ear: of the three cycles formed by the two arcs and the ear, one
// has even length because the lengths sum to an even number.
inline std::vector<int> even_cycle_in_block(const Graph& g, const Block& b) {
    std::set<int> block_edges(b.edge_indices.begin(), b.edge_indices.end());
    std::map<int, std::vector<std::pair<int, int>>> adj;
    for (int e : b.edge_indices) {
        auto [u, v] = g.edges()[e];
        adj[u].emplace_back(v, e);
        adj[v].emplace_back(u, e);
    }
    // base cycle via DFS
    std::map<int, int> parent_v, parent_e;
    std::vector<int> c0;
    {
        std::vector<std::pair<int, int>> stack{{b.vertex_indices.front(), -1}};
        std::set<int> seen;
        while (!stack.empty() && c0.empty()) {
            auto [v, pe] = stack.back();
            stack.pop_back();
            if (seen.count(v)) continue;
            seen.insert(v);
            parent_e[v] = pe;
            for (auto [w, e] : adj[v]) {
                if (e == pe) continue;
                if (!seen.count(w)) {
                    parent_v[w] = v;
                    stack.push_back({w, e});
                } else {
                    // back edge v..w: walk tree path from v up to w
                    std::vector<int> path{v};
                    int x = v;
                    while (x != w) {
                        x = parent_v[x];
                        path.push_back(x);
                    }
                    c0 = path;
                    break;
                }
            }
        }
    }
    if (c0.size() % 2 == 0) return c0;

    std::set<int> on_c0(c0.begin(), c0.end());
    std::set<int> c0_edges;
    for (size_t i = 0; i < c0.size(); i++) {
        int u = c0[i], v = c0[(i + 1) % c0.size()];
        for (auto [w, e] : adj[u])
            if (w == v && !c0_edges.count(e)) {
                c0_edges.insert(e);
                break;
            }
    }

    // ear search: BFS from each cycle vertex through non-cycle edges and
    // non-cycle interior vertices until another cycle vertex is reached
    for (int x : c0) {
        std::map<int, std::pair<int, int>> pred;  // v -> (prev vertex, edge)
        std::deque<int> q{x};
        std::set<int> seen{x};
        int hit = -1;
        while (!q.empty() && hit == -1) {
            int v = q.front();
            q.pop_front();
            for (auto [w, e] : adj[v]) {
                if (c0_edges.count(e)) continue;
                if (v != x && on_c0.count(v)) continue;  // only endpoints on C0
                if (seen.count(w)) continue;
                seen.insert(w);
                pred[w] = {v, e};
                if (on_c0.count(w) && w != x) {
                    hit = w;
                    break;
                }
                if (!on_c0.count(w)) q.push_back(w);
            }
        }
        if (hit == -1) continue;
        std::vector<int> ear{hit};
        int v = hit;
        while (v != x) {
            v = pred[v].first;
            ear.push_back(v);
        }
        // ear = hit .. x, interior off C0
        int c = static_cast<int>(ear.size()) - 1;
        // split C0 into the two arcs between x and hit
        auto xi = std::find(c0.begin(), c0.end(), x) - c0.begin();
        auto yi = std::find(c0.begin(), c0.end(), hit) - c0.begin();
        std::vector<int> arc1, arc2;
        for (size_t i = xi;; i = (i + 1) % c0.size()) {
            arc1.push_back(c0[i]);
            if (static_cast<long>(i) == yi) break;
        }
        for (size_t i = yi;; i = (i + 1) % c0.size()) {
            arc2.push_back(c0[i]);
            if (static_cast<long>(i) == xi) break;
        }
        const std::vector<int>& arc =
            ((arc1.size() - 1 + c) % 2 == 0) ? arc1 : arc2;
        // cycle = arc (x..hit or hit..x) + ear interior
        std::vector<int> cyc;
        if (arc.front() == x) {
            cyc = arc;  // x .. hit
            for (size_t i = 1; i + 1 < ear.size(); i++) cyc.push_back(ear[i]);
        } else {
            cyc = arc;  // hit .. x
            std::vector<int> interior(ear.begin() + 1, ear.end() - 1);
            std::reverse(interior.begin(), interior.end());
            for (int w : interior) cyc.push_back(w);
        }
        return cyc;
    }
    throw GraphError("internal: no ear found in biconnected non-cycle block");
}

}  // namespace detail

// Even-length cycle witness (vertex sequence), or nullopt. Expects a
// loop-free graph. Blocks decide: an even cycle exists iff some block is
// neither a single edge nor an odd simple cycle.
inline std::optional<std::vector<int>> has_even_cycle(const Graph& g) {
    auto bd = block_decomposition(g);
    for (const auto& b : bd.blocks) {
        if (b.is_single_edge()) continue;
        if (detail::block_is_cycle(g, b)) {
            if (b.edge_indices.size() % 2 == 0) return detail::cycle_order(g, b);
        } else {
            return detail::even_cycle_in_block(g, b);
        }
    }
    return std::nullopt;
}

// Shape of a connected loop-free graph without even cycles.
struct OddCycleStructure {
    enum class Kind { Tree, Unicyclic, Other } kind;
    std::vector<int> cycle;  // cyclic vertex order (Unicyclic)
    // per cycle position: vertices of the pendant tree T_v (first entry is
    // the cycle vertex itself) and its edge indices
    std::vector<std::vector<int>> tree_vertices;
    std::vector<std::vector<int>> tree_edges;
    // for Kind::Other: two distinct cycle blocks (witness material)
    std::vector<std::vector<int>> extra_cycles;
};

inline OddCycleStructure odd_cycle_structure(const Graph& g) {
    if (!g.is_connected()) throw GraphError("odd_cycle_structure: graph must be connected");
    if (has_even_cycle(g)) throw GraphError("odd_cycle_structure: graph has an even cycle");
    auto bd = block_decomposition(g);
    std::vector<const Block*> cycles;
    for (const auto& b : bd.blocks)
        if (!b.is_single_edge()) cycles.push_back(&b);

    OddCycleStructure out;
    if (cycles.empty()) {
        out.kind = OddCycleStructure::Kind::Tree;
        return out;
    }
    if (cycles.size() >= 2) {
        out.kind = OddCycleStructure::Kind::Other;
        for (const auto* c : cycles) out.extra_cycles.push_back(detail::cycle_order(g, *c));
        return out;
    }
    out.kind = OddCycleStructure::Kind::Unicyclic;
    out.cycle = detail::cycle_order(g, *cycles.front());
    std::set<int> cyc_edges(cycles.front()->edge_indices.begin(),
                            cycles.front()->edge_indices.end());
    std::set<int> cyc_verts(out.cycle.begin(), out.cycle.end());
    // T_v = component of v after deleting the cycle edges
    for (int v : out.cycle) {
        std::vector<int> verts{v}, edges;
        std::set<int> seen{v};
        std::vector<int> stack{v};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e = 0; e < g.edge_count(); e++) {
                if (cyc_edges.count(e)) continue;
                auto [a, b] = g.edges()[e];
                int w = -1;
                if (a == u) w = b;
                else if (b == u) w = a;
                else continue;
                if (seen.count(w)) continue;
                seen.insert(w);
                verts.push_back(w);
                edges.push_back(e);
                stack.push_back(w);
            }
        }
        out.tree_vertices.push_back(std::move(verts));
        out.tree_edges.push_back(std::move(edges));
    }
    return out;
}

// Connected acyclic subgraph, as sorted vertex indices plus edge indices.
struct Subtree {
    std::vector<int> vertices;
    std::vector<int> edges;

    bool operator<(const Subtree& o) const {
        return std::tie(vertices, edges) < std::tie(o.vertices, o.edges);
    }
    bool operator==(const Subtree& o) const {
        return vertices == o.vertices && edges == o.edges;
    }
};

inline constexpr int kSubtreeVertexCap = 16;

// All subtrees (connected acyclic subgraphs with >= 1 vertex), each exactly
// once up to equality of vertex/edge sets. Exponential; guarded.
inline std::vector<Subtree> enumerate_subtrees(const Graph& g) {
    if (g.vertex_count() > kSubtreeVertexCap)
        throw GraphError("enumerate_subtrees: more than " +
                         std::to_string(kSubtreeVertexCap) + " vertices");
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<Subtree> out;
    for (int v = 0; v < n; v++) out.push_back({{v}, {}});

    // grow trees anchored at their minimum vertex; the forbidden set makes
    // each edge set appear exactly once
    std::vector<char> in_tree(n, 0);
    std::vector<int> tree_verts, tree_edges;
    std::function<void(int, std::vector<char>&)> grow =
        [&](int root, std::vector<char>& banned) {
            if (!tree_edges.empty()) {
                Subtree s;
                s.vertices = tree_verts;
                std::sort(s.vertices.begin(), s.vertices.end());
                s.edges = tree_edges;
                std::sort(s.edges.begin(), s.edges.end());
                out.push_back(std::move(s));
            }
            std::vector<int> cands;
            for (int e = 0; e < m; e++) {
                if (banned[e]) continue;
                auto [a, b] = g.edges()[e];
                if (in_tree[a] == in_tree[b]) continue;  // cycle or detached
                int nw = in_tree[a] ? b : a;
                if (nw < root) continue;
                cands.push_back(e);
            }
            std::vector<char> local = banned;
            for (int e : cands) {
                auto [a, b] = g.edges()[e];
                if (in_tree[a] == in_tree[b]) { local[e] = 1; continue; }
                int nw = in_tree[a] ? b : a;
                in_tree[nw] = 1;
                tree_verts.push_back(nw);
                tree_edges.push_back(e);
                grow(root, local);
                tree_edges.pop_back();
                tree_verts.pop_back();
                in_tree[nw] = 0;
                local[e] = 1;
            }
        };
    for (int root = 0; root < n; root++) {
        std::vector<char> banned(m, 0);
        in_tree[root] = 1;
        tree_verts = {root};
        tree_edges.clear();
        grow(root, banned);
        in_tree[root] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace tilt

#endif
