#ifndef TILT_GRAPH_HPP
#define TILT_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace tilt {

// Vertex identifiers are nonempty strings without whitespace. Internally
// everything runs on dense indices into Graph::vertices.
using VertexId = std::string;

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite multigraph with per-vertex loop counts. Loops never appear in
// `edges`; they are carried as metadata and stripped before any computation.
class Graph {
public:
    Graph() = default;

    explicit Graph(std::vector<VertexId> vertices) {
        for (auto& v : vertices) add_vertex(std::move(v));
    }

    int add_vertex(VertexId id) {
        if (id.empty()) throw GraphError("empty vertex identifier");
        for (char c : id)
            if (std::isspace(static_cast<unsigned char>(c)))
                throw GraphError("vertex identifier contains whitespace: '" + id + "'");
        if (index_.count(id)) throw GraphError("duplicate vertex: " + id);
        int idx = static_cast<int>(vertices_.size());
        index_.emplace(id, idx);
        vertices_.push_back(std::move(id));
        loops_.push_back(0);
        return idx;
    }

    void add_edge(const VertexId& u, const VertexId& v) {
        add_edge_idx(index_of(u), index_of(v));
    }

    void add_edge_idx(int u, int v) {
        check_idx(u);
        check_idx(v);
        if (u == v) throw GraphError("edge endpoints coincide; use add_loops");
        edges_.emplace_back(std::min(u, v), std::max(u, v));
    }

    void add_loops(const VertexId& v, int count = 1) {
        if (count < 1) throw GraphError("loop count must be >= 1");
        loops_[index_of(v)] += count;
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const VertexId& vertex_name(int i) const {
        check_idx(i);
        return vertices_[i];
    }

    int index_of(const VertexId& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw GraphError("unknown vertex: " + v);
        return it->second;
    }

    bool has_vertex(const VertexId& v) const { return index_.count(v) != 0; }

    int loop_count(int i) const {
        check_idx(i);
        return loops_[i];
    }

    int total_loops() const {
        int t = 0;
        for (int l : loops_) t += l;
        return t;
    }

    bool has_parallel_edges() const {
        auto es = edges_;
        std::sort(es.begin(), es.end());
        return std::adjacent_find(es.begin(), es.end()) != es.end();
    }

    std::vector<std::vector<int>> adjacency() const {
        std::vector<std::vector<int>> adj(vertices_.size());
        for (auto [u, v] : edges_) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        return adj;
    }

    std::vector<int> degrees() const {
        std::vector<int> deg(vertices_.size(), 0);
        for (auto [u, v] : edges_) {
            deg[u]++;
            deg[v]++;
        }
        return deg;
    }

    bool is_connected() const {
        if (vertices_.empty()) return true;
        auto adj = adjacency();
        std::vector<char> seen(vertices_.size(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int visited = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w]) {
                    seen[w] = 1;
                    visited++;
                    stack.push_back(w);
                }
        }
        return visited == vertex_count();
    }

private:
    void check_idx(int i) const {
        if (i < 0 || i >= static_cast<int>(vertices_.size()))
            throw GraphError("vertex index out of range");
    }

    std::vector<VertexId> vertices_;
    std::vector<std::pair<int, int>> edges_;  // normalized (min,max) pairs
    std::vector<int> loops_;
    std::unordered_map<VertexId, int> index_;
};

// Directed multigraph. Parallel arrows and loop arrows are permitted
// (double quivers never produce loops, but the type does not forbid them).
class Quiver {
public:
    Quiver() = default;

    explicit Quiver(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
        for (int i = 0; i < static_cast<int>(vertices_.size()); i++)
            index_.emplace(vertices_[i], i);
        if (index_.size() != vertices_.size()) throw GraphError("duplicate quiver vertex");
    }

    void add_arrow(int src, int dst) {
        if (src < 0 || dst < 0 || src >= vertex_count() || dst >= vertex_count())
            throw GraphError("arrow endpoint out of range");
        arrows_.emplace_back(src, dst);
    }

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int arrow_count() const { return static_cast<int>(arrows_.size()); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    const VertexId& vertex_name(int i) const { return vertices_.at(i); }

    int index_of(const VertexId& v) const {
        auto it = index_.find(v);
        if (it == index_.end()) throw GraphError("unknown quiver vertex: " + v);
        return it->second;
    }

    // Underlying multigraph, loops dropped into the loop map.
    Graph underlying_graph() const {
        Graph g(vertices_);
        for (auto [s, t] : arrows_) {
            if (s == t)
                g.add_loops(vertices_[s]);
            else
                g.add_edge_idx(s, t);
        }
        return g;
    }

    Quiver opposite() const {
        Quiver q(vertices_);
        for (auto [s, t] : arrows_) q.add_arrow(t, s);
        return q;
    }

    bool is_source(int v) const {
        for (auto [s, t] : arrows_)
            if (t == v) return false;
        return true;
    }

    bool is_sink(int v) const {
        for (auto [s, t] : arrows_)
            if (s == v) return false;
        return true;
    }

    bool is_isolated(int v) const {
        for (auto [s, t] : arrows_)
            if (s == v || t == v) return false;
        return true;
    }

    // Every vertex is a source, a sink, or isolated.
    bool is_bipartite_quiver() const {
        for (int v = 0; v < vertex_count(); v++)
            if (!is_source(v) && !is_sink(v)) return false;
        return true;
    }

    bool is_acyclic() const {
        int n = vertex_count();
        std::vector<int> indeg(n, 0);
        std::vector<std::vector<int>> out(n);
        for (auto [s, t] : arrows_) {
            indeg[t]++;
            out[s].push_back(t);
        }
        std::vector<int> q;
        for (int v = 0; v < n; v++)
            if (indeg[v] == 0) q.push_back(v);
        int removed = 0;
        while (!q.empty()) {
            int v = q.back();
            q.pop_back();
            removed++;
            for (int w : out[v])
                if (--indeg[w] == 0) q.push_back(w);
        }
        return removed == n;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<std::pair<int, int>> arrows_;
    std::unordered_map<VertexId, int> index_;
};

// Total map vertex -> {+,-}. Stored over the declared vertex order of the
// associated graph/quiver; true = '+'.
class SignAssignment {
public:
    SignAssignment() = default;
    explicit SignAssignment(std::vector<VertexId> vertices, std::vector<bool> plus)
        : vertices_(std::move(vertices)), plus_(std::move(plus)) {
        if (vertices_.size() != plus_.size())
            throw GraphError("sign assignment size mismatch");
    }

    // Bit i of `mask` gives the sign of vertex i (1 = '+').
    static SignAssignment from_mask(const std::vector<VertexId>& vertices, unsigned long long mask) {
        std::vector<bool> plus(vertices.size());
        for (size_t i = 0; i < vertices.size(); i++) plus[i] = (mask >> i) & 1ULL;
        return SignAssignment(vertices, std::move(plus));
    }

    int size() const { return static_cast<int>(plus_.size()); }
    bool is_plus(int i) const { return plus_.at(i); }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    bool matches_vertices(const std::vector<VertexId>& vs) const { return vertices_ == vs; }

    SignAssignment negated() const {
        auto p = plus_;
        p.flip();
        return SignAssignment(vertices_, std::move(p));
    }

    std::string to_string() const {
        std::string s;
        for (bool b : plus_) s += b ? '+' : '-';
        return s;
    }

private:
    std::vector<VertexId> vertices_;
    std::vector<bool> plus_;
};

// -- core constructions --------------------------------------------------

// Double quiver: one arrow in each direction per edge; loops of g ignored.
inline Quiver double_quiver(const Graph& g) {
    Quiver q(g.vertices());
    for (auto [u, v] : g.edges()) {
        q.add_arrow(u, v);
        q.add_arrow(v, u);
    }
    return q;
}

// Keep only arrows from '+' vertices to '-' vertices.
inline Quiver bipartite_subquiver(const Quiver& q, const SignAssignment& eps) {
    if (!eps.matches_vertices(q.vertices()))
        throw GraphError("sign assignment does not match quiver vertices");
    Quiver out(q.vertices());
    for (auto [s, t] : q.arrows())
        if (eps.is_plus(s) && !eps.is_plus(t)) out.add_arrow(s, t);
    return out;
}

inline Graph strip_loops(const Graph& g) {
    Graph out(g.vertices());
    for (auto [u, v] : g.edges()) out.add_edge_idx(u, v);
    return out;
}

// Weakly connected components, ordered by smallest contained vertex index.
// Isolated vertices form singleton components.
inline std::vector<Quiver> connected_components(const Quiver& q) {
    int n = q.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (auto [s, t] : q.arrows()) {
        adj[s].push_back(t);
        adj[t].push_back(s);
    }
    int ncomp = 0;
    for (int v = 0; v < n; v++) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ncomp++;
    }
    // components are discovered in order of smallest vertex index already
    std::vector<std::vector<VertexId>> verts(ncomp);
    std::vector<int> local(n, -1);
    for (int v = 0; v < n; v++) {
        local[v] = static_cast<int>(verts[comp[v]].size());
        verts[comp[v]].push_back(q.vertex_name(v));
    }
    std::vector<Quiver> out;
    out.reserve(ncomp);
    for (int c = 0; c < ncomp; c++) out.emplace_back(std::move(verts[c]));
    for (auto [s, t] : q.arrows()) out[comp[s]].add_arrow(local[s], local[t]);
    return out;
}

// Connected components of a graph (loops follow their vertex), ordered by
// smallest contained vertex index.
inline std::vector<Graph> graph_components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    auto adj = g.adjacency();
    int ncomp = 0;
    for (int v = 0; v < n; v++) {
        if (comp[v] != -1) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = ncomp;
                    stack.push_back(w);
                }
        }
        ncomp++;
    }
    std::vector<Graph> out;
    std::vector<int> local(n, -1);
    for (int c = 0; c < ncomp; c++) out.emplace_back();
    for (int v = 0; v < n; v++) {
        local[v] = out[comp[v]].add_vertex(g.vertex_name(v));
        if (g.loop_count(v) > 0)
            out[comp[v]].add_loops(g.vertex_name(v), g.loop_count(v));
    }
    for (auto [u, v] : g.edges()) out[comp[u]].add_edge_idx(local[u], local[v]);
    return out;
}

// -- parsing -------------------------------------------------------------

// Text format, one item per line:
//   vertices: v1 v2 ...
//   u -- v
//   loop v [k]
// Blank lines and lines starting with '#' are skipped.
inline Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    Graph g;
    bool have_vertices = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        lineno++;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "vertices:") {
            if (have_vertices) throw GraphError("duplicate vertices header");
            VertexId v;
            while (ls >> v) g.add_vertex(v);
            have_vertices = true;
        } else if (tok == "loop") {
            VertexId v;
            int k = 1;
            if (!(ls >> v)) throw GraphError("line " + std::to_string(lineno) + ": loop needs a vertex");
            if (!(ls >> k)) k = 1;
            g.add_loops(v, k);
        } else {
            std::string dash, v;
            if (!(ls >> dash >> v) || dash != "--")
                throw GraphError("line " + std::to_string(lineno) + ": expected 'u -- v'");
            std::string extra;
            if (ls >> extra) throw GraphError("line " + std::to_string(lineno) + ": trailing tokens");
            g.add_edge(tok, v);
        }
    }
    if (!have_vertices) throw GraphError("missing 'vertices:' header");
    return g;
}

// {"vertices":[...], "edges":[[u,v],...], "loops":{"v":k,...}}
inline Graph parse_graph_json(const nlohmann::json& j) {
    Graph g;
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw GraphError("json graph needs a 'vertices' array");
    for (const auto& v : j["vertices"]) g.add_vertex(v.get<std::string>());
    if (j.contains("edges"))
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2) throw GraphError("edge must be a pair");
            g.add_edge(e[0].get<std::string>(), e[1].get<std::string>());
        }
    if (j.contains("loops"))
        for (auto it = j["loops"].begin(); it != j["loops"].end(); ++it)
            g.add_loops(it.key(), it.value().get<int>());
    return g;
}

// Auto-detect: leading '{' means JSON, otherwise the text format.
inline Graph parse_graph(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_graph_json(nlohmann::json::parse(text));
        break;
    }
    return parse_graph_text(text);
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    auto& es = j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        es.push_back({g.vertex_name(u), g.vertex_name(v)});
    nlohmann::json loops = nlohmann::json::object();
    for (int i = 0; i < g.vertex_count(); i++)
        if (g.loop_count(i) > 0) loops[g.vertex_name(i)] = g.loop_count(i);
    j["loops"] = loops;
    return j;
}

}  // namespace tilt

#endif
