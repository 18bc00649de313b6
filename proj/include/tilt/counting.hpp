#ifndef TILT_COUNTING_HPP
#define TILT_COUNTING_HPP

#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "tilt/dynkin.hpp"
#include "tilt/graph.hpp"

namespace tilt {

inline constexpr int kCountVertexCap = 34;
inline constexpr int kPerEpsVertexCap = 24;

namespace detail {

// Shared evaluation core: given the loop-stripped graph, compute the
// tilting count of Q_eps for one sign mask, or report the failing
// component. Counts per Dynkin type are memoized.
class EpsEvaluator {
public:
    explicit EpsEvaluator(const Graph& stripped)
        : n_(stripped.vertex_count()), edges_(stripped.edges()) {}

    // plus[v] gives the sign of vertex v
    std::optional<BigNat> eval(const std::vector<char>& plus,
                               std::vector<int>* bad_component = nullptr) const {
        // component labels over active edges (sign changes across the edge)
        std::vector<int> parent(n_);
        for (int v = 0; v < n_; v++) parent[v] = v;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        std::vector<int> active;
        active.reserve(edges_.size());
        for (size_t e = 0; e < edges_.size(); e++) {
            auto [u, v] = edges_[e];
            if (plus[u] != plus[v]) {
                active.push_back(static_cast<int>(e));
                int a = find(u), b = find(v);
                if (a != b) parent[a] = b;
            }
        }
        std::vector<int> comp_edges(n_, 0), comp_size(n_, 0);
        for (int v = 0; v < n_; v++) comp_size[find(v)]++;
        for (int e : active) comp_edges[find(edges_[e].first)]++;

        BigNat total = 1;
        for (int r = 0; r < n_; r++) {
            if (find(r) != r || comp_size[r] <= 1) continue;  // isolated: A_1, factor 1
            auto c = component_count(r, find, comp_size[r], comp_edges[r], active);
            if (!c) {
                if (bad_component) {
                    bad_component->clear();
                    for (int v = 0; v < n_; v++)
                        if (find(v) == r) bad_component->push_back(v);
                }
                return std::nullopt;
            }
            total *= *c;
        }
        return total;
    }

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

private:
    template <class Find>
    std::optional<BigNat> component_count(int root, Find&& find, int nverts, int nedges,
                                          const std::vector<int>& active) const {
        if (nedges != nverts - 1) return std::nullopt;  // contains a cycle
        // collect the component's edges; check simplicity and degrees
        std::vector<std::pair<int, int>> ce;
        ce.reserve(nedges);
        for (int e : active)
            if (find(edges_[e].first) == root) ce.push_back(edges_[e]);
        std::sort(ce.begin(), ce.end());
        if (std::adjacent_find(ce.begin(), ce.end()) != ce.end())
            return std::nullopt;  // parallel arrows
        std::map<int, std::vector<int>> adj;
        for (auto [u, v] : ce) {
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
        int branch = -1, maxdeg = 0;
        for (auto& [v, nb] : adj) {
            int d = static_cast<int>(nb.size());
            maxdeg = std::max(maxdeg, d);
            if (d >= 3) {
                if (branch != -1 || d > 3) return std::nullopt;
                branch = v;
            }
        }
        if (branch == -1) return a_count(nverts);  // path
        std::array<int, 3> arms{};
        int k = 0;
        for (int w : adj[branch]) {
            int len = 1, prev = branch, cur = w;
            while (true) {
                int next = -1;
                for (int x : adj[cur])
                    if (x != prev) next = x;
                if (next == -1) break;
                prev = cur;
                cur = next;
                len++;
            }
            arms[k++] = len;
        }
        std::sort(arms.begin(), arms.end());
        auto [a, b, c] = arms;
        if (a == 1 && b == 1) return d_count(c + 3);
        if (a == 1 && b == 2 && c >= 2 && c <= 4)
            return dynkin_tilt_count({DynkinFamily::E, c + 4});
        return std::nullopt;
    }

    static const BigNat& a_count(int n) {
        static std::vector<BigNat> table = [] {
            std::vector<BigNat> t;
            for (int i = 0; i <= kCountVertexCap + 1; i++)
                t.push_back(dynkin_tilt_count({DynkinFamily::A, i == 0 ? 1 : i}));
            return t;
        }();
        return table[n];
    }

    static const BigNat& d_count(int n) {
        static std::vector<BigNat> table = [] {
            std::vector<BigNat> t(4);
            for (int i = 4; i <= kCountVertexCap + 1; i++)
                t.push_back(dynkin_tilt_count({DynkinFamily::D, i}));
            return t;
        }();
        return table[n];
    }

    int n_;
    std::vector<std::pair<int, int>> edges_;
};

// canonical row order: vertex 0 is the slowest bit, '+' sorts before '-'
inline std::vector<char> signs_from_row(std::uint64_t row, int n) {
    std::vector<char> plus(n);
    for (int i = 0; i < n; i++) plus[i] = ((row >> (n - 1 - i)) & 1ULL) ? 0 : 1;
    return plus;
}

}  // namespace detail

// Count of tilting modules for Q_eps, product over components; nullopt if
// some component is not Dynkin.
inline std::optional<BigNat> tilt_count_for_eps(const Graph& g, const SignAssignment& eps) {
    if (!eps.matches_vertices(g.vertices()))
        throw GraphError("tilt_count_for_eps: sign assignment does not match graph");
    std::vector<char> plus(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); i++) plus[i] = eps.is_plus(i);
    detail::EpsEvaluator ev(strip_loops(g));
    return ev.eval(plus);
}

struct CountResult {
    enum class Verdict { Finite, Infinite } verdict;
    BigNat count;  // valid when Finite
    // witness when Infinite
    std::optional<SignAssignment> witness_eps;
    std::optional<Quiver> witness_component;
    // optional exhaustive breakdown
    std::optional<std::vector<std::pair<SignAssignment, std::optional<BigNat>>>> per_eps;
    // meta
    int total_loops = 0;
    bool connected = false;

    bool finite() const { return verdict == Verdict::Finite; }
};

struct CountOptions {
    int threads = 1;
    bool per_eps = false;  // exhaustive mode, disables early exit
};

namespace detail {

inline Quiver component_quiver(const Graph& stripped, const std::vector<char>& plus,
                               const std::vector<int>& comp_verts) {
    std::vector<VertexId> names;
    std::map<int, int> local;
    for (int v : comp_verts) {
        local[v] = static_cast<int>(names.size());
        names.push_back(stripped.vertex_name(v));
    }
    Quiver q(names);
    for (auto [u, v] : stripped.edges()) {
        if (!local.count(u) || !local.count(v)) continue;
        if (plus[u] && !plus[v]) q.add_arrow(local[u], local[v]);
        if (plus[v] && !plus[u]) q.add_arrow(local[v], local[u]);
    }
    return q;
}

}  // namespace detail

// Full 2^|V| table, rows in canonical order. Guarded.
inline std::vector<std::pair<SignAssignment, std::optional<BigNat>>> per_eps_breakdown(
    const Graph& g) {
    int n = g.vertex_count();
    if (n > kPerEpsVertexCap)
        throw GraphError("per_eps_breakdown: more than " +
                         std::to_string(kPerEpsVertexCap) + " vertices");
    if (n == 0) throw GraphError("per_eps_breakdown: empty graph");
    Graph stripped = strip_loops(g);
    detail::EpsEvaluator ev(stripped);
    std::vector<std::pair<SignAssignment, std::optional<BigNat>>> out;
    out.reserve(1ULL << n);
    for (std::uint64_t row = 0; row < (1ULL << n); row++) {
        auto plus = detail::signs_from_row(row, n);
        std::vector<bool> pb(plus.begin(), plus.end());
        out.emplace_back(SignAssignment(g.vertices(), pb), ev.eval(plus));
    }
    return out;
}

// The main engine: fix the first declared vertex at '+', enumerate the
// remaining sign maps, double the sum. Loops are stripped internally, so
// the result is loop-independent. The infinite witness is the canonical
// first failing assignment regardless of thread count.
inline CountResult count_two_term_tilting(const Graph& g, CountOptions opts = {}) {
    int n = g.vertex_count();
    if (n == 0) throw GraphError("count_two_term_tilting: empty graph");
    if (n > kCountVertexCap)
        throw GraphError("count_two_term_tilting: more than " +
                         std::to_string(kCountVertexCap) +
                         " vertices; use the structural classifier instead");
    Graph stripped = strip_loops(g);
    detail::EpsEvaluator ev(stripped);

    CountResult res;
    res.total_loops = g.total_loops();
    res.connected = stripped.is_connected();

    const std::uint64_t range = 1ULL << (n - 1);
    int nthreads = std::max(1, opts.threads);
    if (static_cast<std::uint64_t>(nthreads) > range) nthreads = static_cast<int>(range);

    std::atomic<std::uint64_t> first_fail{UINT64_MAX};
    std::vector<BigNat> partial(nthreads, 0);

    auto worker = [&](int t) {
        BigNat sum = 0;
        for (std::uint64_t sub = t; sub < range; sub += nthreads) {
            if (!opts.per_eps && sub >= first_fail.load(std::memory_order_relaxed)) continue;
            // vertex 0 fixed '+': full row = sub over vertices 1..n-1
            auto plus = detail::signs_from_row(sub, n);  // row with top bit 0
            auto c = ev.eval(plus);
            if (!c) {
                std::uint64_t cur = first_fail.load();
                while (sub < cur && !first_fail.compare_exchange_weak(cur, sub)) {}
            } else {
                sum += *c;
            }
        }
        partial[t] = std::move(sum);
    };
    if (nthreads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < nthreads; t++) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    std::uint64_t fail = first_fail.load();
    if (fail != UINT64_MAX) {
        res.verdict = CountResult::Verdict::Infinite;
        auto plus = detail::signs_from_row(fail, n);
        std::vector<int> bad;
        ev.eval(plus, &bad);
        std::vector<bool> pb(plus.begin(), plus.end());
        res.witness_eps = SignAssignment(g.vertices(), pb);
        res.witness_component = detail::component_quiver(stripped, plus, bad);
    } else {
        res.verdict = CountResult::Verdict::Finite;
        BigNat total = 0;
        for (auto& p : partial) total += p;
        res.count = 2 * total;
    }
    if (opts.per_eps && n <= kPerEpsVertexCap) res.per_eps = per_eps_breakdown(g);
    return res;
}

}  // namespace tilt

#endif
