#ifndef TILT_AR_ORACLE_HPP
#define TILT_AR_ORACLE_HPP

#include <algorithm>
#include <bitset>
#include <optional>
#include <vector>

#include "tilt/dynkin.hpp"
#include "tilt/graph.hpp"
#include "tilt/linalg.hpp"

namespace tilt {

inline constexpr int kOracleRankCap = 8;
inline constexpr int kMaxIndecomposables = 120;  // E8 positive roots

// An acyclic quiver whose underlying graph is a simply-laced Dynkin
// diagram; the substrate the tilting oracle works over.
class OrientedQuiver {
public:
    explicit OrientedQuiver(Quiver q) : q_(std::move(q)) {
        if (!q_.is_acyclic()) throw GraphError("oracle: quiver must be acyclic");
        Graph under = q_.underlying_graph();
        if (under.total_loops() > 0 || under.has_parallel_edges())
            throw GraphError("oracle: quiver has loops or parallel arrows");
        auto t = recognize_dynkin(under);
        if (!t) throw GraphError("oracle: underlying graph is not Dynkin");
        type_ = *t;
    }

    const Quiver& quiver() const { return q_; }
    const DynkinType& type() const { return type_; }
    int rank() const { return q_.vertex_count(); }

private:
    Quiver q_;
    DynkinType type_;
};

// Quiver representation: dimension vector plus one rational matrix per
// arrow, shaped dim(target) x dim(source).
struct Rep {
    std::vector<int> dim;
    std::vector<RatMatrix> mats;  // parallel to the quiver's arrow list
};

inline long long euler_form(const Quiver& q, const std::vector<int>& x,
                            const std::vector<int>& y) {
    if (static_cast<int>(x.size()) != q.vertex_count() ||
        static_cast<int>(y.size()) != q.vertex_count())
        throw GraphError("euler_form: vector length mismatch");
    long long v = 0;
    for (int i = 0; i < q.vertex_count(); i++) v += 1LL * x[i] * y[i];
    for (auto [s, t] : q.arrows()) v -= 1LL * x[s] * y[t];
    return v;
}

// dim Hom(x, y): nullity of the commuting-square system
// { f_j x_a = y_a f_i  for every arrow a: i -> j }, solved exactly.
inline int hom_dim(const Quiver& q, const Rep& x, const Rep& y) {
    int n = q.vertex_count();
    if (static_cast<int>(x.dim.size()) != n || static_cast<int>(y.dim.size()) != n)
        throw GraphError("hom_dim: representations over different quivers");
    // unknowns: entries of f_i (y.dim[i] x x.dim[i]), vertex-major
    std::vector<int> offset(n + 1, 0);
    for (int i = 0; i < n; i++) offset[i + 1] = offset[i] + y.dim[i] * x.dim[i];
    int unknowns = offset[n];
    if (unknowns == 0) return 0;

    int eqs = 0;
    for (auto [s, t] : q.arrows()) eqs += y.dim[t] * x.dim[s];
    RatMatrix C(std::max(eqs, 1), unknowns);
    int row = 0;
    for (size_t a = 0; a < q.arrows().size(); a++) {
        auto [i, j] = q.arrows()[a];
        const RatMatrix& Xa = x.mats[a];  // x.dim[j] x x.dim[i]
        const RatMatrix& Ya = y.mats[a];  // y.dim[j] x y.dim[i]
        // equation block (r, c) over r < y.dim[j], c < x.dim[i]:
        //   sum_k f_j(r,k) Xa(k,c) - sum_k Ya(r,k) f_i(k,c) = 0
        for (int r = 0; r < y.dim[j]; r++)
            for (int c = 0; c < x.dim[i]; c++) {
                for (int k = 0; k < x.dim[j]; k++)
                    if (Xa(k, c) != 0) C(row, offset[j] + r * x.dim[j] + k) += Xa(k, c);
                for (int k = 0; k < y.dim[i]; k++)
                    if (Ya(r, k) != 0) C(row, offset[i] + k * x.dim[i] + c) -= Ya(r, k);
                row++;
            }
    }
    return unknowns - C.rank();
}

// dim Ext^1 via the hereditary identity hom - <dim x, dim y>.
inline int ext_dim(const Quiver& q, const Rep& x, const Rep& y) {
    long long e = hom_dim(q, x, y) - euler_form(q, x.dim, y.dim);
    if (e < 0) throw GraphError("ext_dim: negative value (Euler form inconsistency)");
    return static_cast<int>(e);
}

namespace detail {

inline Rep simple_rep(const Quiver& q, int v) {
    Rep r;
    r.dim.assign(q.vertex_count(), 0);
    r.dim[v] = 1;
    for (auto [s, t] : q.arrows()) r.mats.emplace_back(r.dim[t], r.dim[s]);
    return r;
}

// Inverse reflection at a source i of R: rep over R -> rep over s_i R.
// The new space at i is the cokernel of V_i -> (direct sum over arrows
// i -> j of V_j); reversed arrows pick up the quotient projection.
inline Rep source_reflect(const Quiver& R, const Rep& M, int i, const Quiver& reflected) {
    int n = R.vertex_count();
    std::vector<size_t> out_arrows;
    for (size_t a = 0; a < R.arrows().size(); a++) {
        auto [s, t] = R.arrows()[a];
        if (t == i && s != i) throw GraphError("source_reflect: vertex is not a source");
        if (s == i) out_arrows.push_back(a);
    }
    int D = 0;
    std::vector<int> block_offset;
    for (size_t a : out_arrows) {
        block_offset.push_back(D);
        D += M.dim[R.arrows()[a].second];
    }
    RatMatrix H(D, M.dim[i]);
    for (size_t k = 0; k < out_arrows.size(); k++) {
        const RatMatrix& Xa = M.mats[out_arrows[k]];
        for (int r = 0; r < Xa.rows(); r++)
            for (int c = 0; c < Xa.cols(); c++) H(block_offset[k] + r, c) = Xa(r, c);
    }
    RatMatrix p = H.cokernel_projection();
    p.normalize_rows();

    Rep out;
    out.dim = M.dim;
    out.dim[i] = p.rows();
    // arrows of the reflected quiver map 1:1 to arrows of R by position
    // (reflection only reverses those incident to i)
    out.mats.reserve(R.arrows().size());
    for (size_t a = 0; a < R.arrows().size(); a++) {
        auto [s, t] = R.arrows()[a];
        if (s != i) {
            out.mats.push_back(M.mats[a]);  // untouched arrow
            continue;
        }
        // reversed arrow j -> i: block of p belonging to this summand
        size_t k = std::find(out_arrows.begin(), out_arrows.end(), a) - out_arrows.begin();
        int j = t;
        RatMatrix Y(p.rows(), M.dim[j]);
        for (int r = 0; r < p.rows(); r++)
            for (int c = 0; c < M.dim[j]; c++) Y(r, c) = p(r, block_offset[k] + c);
        out.mats.push_back(std::move(Y));
    }
    // sanity: arrow shapes match the reflected quiver
    for (size_t a = 0; a < reflected.arrows().size(); a++) {
        auto [s, t] = reflected.arrows()[a];
        if (out.mats[a].rows() != out.dim[t] || out.mats[a].cols() != out.dim[s])
            throw GraphError("source_reflect: shape mismatch after reflection");
    }
    return out;
}

inline Quiver reflect_quiver(const Quiver& q, int i) {
    Quiver out(q.vertices());
    for (auto [s, t] : q.arrows()) {
        if (s == i || t == i)
            out.add_arrow(t, s);
        else
            out.add_arrow(s, t);
    }
    return out;
}

// An ordering in which each vertex is a sink once earlier vertices are
// reflected: a reverse topological order of the arrows.
inline std::vector<int> admissible_sink_order(const Quiver& q) {
    int n = q.vertex_count();
    std::vector<int> outdeg(n, 0);
    std::vector<std::vector<int>> in(n);
    for (auto [s, t] : q.arrows()) {
        outdeg[s]++;
        in[t].push_back(s);
    }
    std::vector<int> order, ready;
    for (int v = 0; v < n; v++)
        if (outdeg[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        int v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (int w : in[v])
            if (--outdeg[w] == 0) ready.push_back(w);
    }
    if (static_cast<int>(order.size()) != n)
        throw GraphError("admissible order: quiver is not acyclic");
    return order;
}

inline int positive_root_count(const DynkinType& t) {
    switch (t.family) {
        case DynkinFamily::A: return t.rank * (t.rank + 1) / 2;
        case DynkinFamily::D: return t.rank * (t.rank - 1);
        case DynkinFamily::E: return t.rank == 6 ? 36 : t.rank == 7 ? 63 : 120;
    }
    throw GraphError("unreachable");
}

}  // namespace detail

// One representation per positive root, generated from simples at sinks by
// inverse reflection functors along an admissible sequence.
inline std::vector<Rep> indecomposables(const OrientedQuiver& oq) {
    const Quiver& q = oq.quiver();
    int n = q.vertex_count();
    auto order = detail::admissible_sink_order(q);
    int expected = detail::positive_root_count(oq.type());

    // adjacency of the underlying graph for root-lattice reflections
    std::vector<std::vector<int>> nbr(n);
    for (auto [s, t] : q.arrows()) {
        nbr[s].push_back(t);
        nbr[t].push_back(s);
    }
    auto reflect_vec = [&](std::vector<int> v, int i) {
        int s = 0;
        for (int w : nbr[i]) s += v[w];
        v[i] = s - v[i];
        return v;
    };

    // quivers Q^(0..): Q^(t) = s_{j_t} ... s_{j_1} Q
    std::vector<Quiver> stages{q};
    auto stage = [&](int t) -> const Quiver& {
        while (static_cast<int>(stages.size()) <= t)
            stages.push_back(detail::reflect_quiver(stages.back(),
                                                    order[(stages.size() - 1) % n]));
        return stages[t];
    };

    std::vector<Rep> reps;
    std::vector<std::vector<int>> seen_dims;
    for (int k = 1; static_cast<int>(reps.size()) < expected; k++) {
        if (k > n * 64) throw GraphError("indecomposables: generation did not terminate");
        int jk = order[(k - 1) % n];
        // dimension vector s_{j_1} ... s_{j_{k-1}} e_{j_k}
        std::vector<int> d(n, 0);
        d[jk] = 1;
        for (int t = k - 1; t >= 1; t--) d = reflect_vec(std::move(d), order[(t - 1) % n]);
        // a negative entry means this vertex's tau-orbit is exhausted
        // (its last module was injective); other orbits may still be going
        if (std::any_of(d.begin(), d.end(), [](int x) { return x < 0; })) continue;
        Rep m = detail::simple_rep(stage(k - 1), jk);
        for (int t = k - 1; t >= 1; t--)
            m = detail::source_reflect(stage(t), m, order[(t - 1) % n], stage(t - 1));
        if (m.dim != d) throw GraphError("indecomposables: dimension vector mismatch");
        if (std::find(seen_dims.begin(), seen_dims.end(), d) != seen_dims.end())
            throw GraphError("indecomposables: duplicate root");
        seen_dims.push_back(d);
        reps.push_back(std::move(m));
    }
    return reps;
}

// Pairwise Ext-vanishing graph over the indecomposables.
struct CompatibilityGraph {
    std::vector<Rep> nodes;
    std::vector<std::bitset<kMaxIndecomposables>> adjacency;
};

inline CompatibilityGraph compatibility_graph(const OrientedQuiver& oq) {
    CompatibilityGraph cg;
    cg.nodes = indecomposables(oq);
    const Quiver& q = oq.quiver();
    int N = static_cast<int>(cg.nodes.size());
    if (N > kMaxIndecomposables) throw GraphError("compatibility graph too large");
    cg.adjacency.assign(N, {});
    for (int i = 0; i < N; i++) {
        if (ext_dim(q, cg.nodes[i], cg.nodes[i]) != 0)
            throw GraphError("indecomposable is not rigid");  // Dynkin roots are
        for (int j = i + 1; j < N; j++) {
            if (ext_dim(q, cg.nodes[i], cg.nodes[j]) == 0 &&
                ext_dim(q, cg.nodes[j], cg.nodes[i]) == 0) {
                cg.adjacency[i][j] = true;
                cg.adjacency[j][i] = true;
            }
        }
    }
    return cg;
}

namespace detail {

inline void count_cliques(const std::vector<std::bitset<kMaxIndecomposables>>& adj,
                          std::bitset<kMaxIndecomposables> cand, int start, int need,
                          BigNat& out) {
    if (need == 0) {
        out += 1;
        return;
    }
    if (static_cast<int>(cand.count()) < need) return;
    for (int v = start; v < static_cast<int>(adj.size()); v++) {
        if (!cand[v]) continue;
        count_cliques(adj, cand & adj[v], v + 1, need - 1, out);
    }
}

}  // namespace detail

// Number of basic tilting modules: n-cliques in the compatibility graph
// (maximal rigid of full rank in the hereditary case).
inline BigNat count_tilting(const OrientedQuiver& oq) {
    if (oq.rank() > kOracleRankCap)
        throw GraphError("count_tilting: rank above " + std::to_string(kOracleRankCap));
    auto cg = compatibility_graph(oq);
    std::bitset<kMaxIndecomposables> all;
    for (size_t i = 0; i < cg.nodes.size(); i++) all[i] = true;
    BigNat out = 0;
    detail::count_cliques(cg.adjacency, all, 0, oq.rank(), out);
    return out;
}

}  // namespace tilt

#endif
