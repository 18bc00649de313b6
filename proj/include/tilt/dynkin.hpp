#ifndef TILT_DYNKIN_HPP
#define TILT_DYNKIN_HPP

#include <array>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tilt/graph.hpp"

namespace tilt {

using BigNat = boost::multiprecision::cpp_int;

enum class DynkinFamily { A, D, E };
enum class ExtendedFamily { A, D, E };  // A-tilde, D-tilde, E-tilde

struct DynkinType {
    DynkinFamily family;
    int rank;  // A: n >= 1; D: n >= 4; E: 6..8

    bool operator==(const DynkinType&) const = default;
};

struct ExtendedDynkinType {
    ExtendedFamily family;
    int rank;  // A-tilde_n has n+1 vertices (n >= 1); D: n >= 4; E: 6..8

    bool operator==(const ExtendedDynkinType&) const = default;
};

inline std::string to_string(const DynkinType& t) {
    const char* f = t.family == DynkinFamily::A ? "A" : t.family == DynkinFamily::D ? "D" : "E";
    return std::string(f) + std::to_string(t.rank);
}

inline std::string to_string(const ExtendedDynkinType& t) {
    const char* f = t.family == ExtendedFamily::A   ? "A~"
                    : t.family == ExtendedFamily::D ? "D~"
                                                    : "E~";
    return std::string(f) + std::to_string(t.rank);
}

namespace detail {

// Arm lengths (edge counts) from the unique branch vertex of a tree that
// has exactly one vertex of degree 3 and no vertex of degree >= 4. Sorted
// ascending. Returns nullopt if the degree pattern is different.
inline std::optional<std::array<int, 3>> branch_arm_lengths(const Graph& g) {
    auto deg = g.degrees();
    int branch = -1;
    for (int v = 0; v < g.vertex_count(); v++) {
        if (deg[v] >= 4) return std::nullopt;
        if (deg[v] == 3) {
            if (branch != -1) return std::nullopt;
            branch = v;
        }
    }
    if (branch == -1) return std::nullopt;
    auto adj = g.adjacency();
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
    return arms;
}

inline bool is_tree(const Graph& g) {
    return g.is_connected() && g.edge_count() == g.vertex_count() - 1;
}

}  // namespace detail

// ADE recognition of a connected loop-free graph. Multi-edges, cycles and
// wrong arm profiles all yield nullopt.
inline std::optional<DynkinType> recognize_dynkin(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    if (!g.is_connected()) throw GraphError("recognize_dynkin: disconnected input");
    if (g.has_parallel_edges()) return std::nullopt;
    if (!detail::is_tree(g)) return std::nullopt;
    auto deg = g.degrees();
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (maxdeg <= 2) return DynkinType{DynkinFamily::A, g.vertex_count()};  // path
    auto arms = detail::branch_arm_lengths(g);
    if (!arms) return std::nullopt;
    auto [a, b, c] = *arms;
    if (a == 1 && b == 1) return DynkinType{DynkinFamily::D, c + 3};
    if (a == 1 && b == 2 && c >= 2 && c <= 4)
        return DynkinType{DynkinFamily::E, c + 4};
    return std::nullopt;
}

// Extended (affine) ADE recognition of a connected loop-free graph. A
// double edge counts as A~_1.
inline std::optional<ExtendedDynkinType> recognize_extended_dynkin(const Graph& g) {
    if (g.vertex_count() == 0) return std::nullopt;
    if (!g.is_connected()) throw GraphError("recognize_extended_dynkin: disconnected input");
    int n = g.vertex_count();
    auto deg = g.degrees();
    // cycle (including the 2-vertex double edge): connected, all degrees 2
    if (g.edge_count() == n &&
        std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; }))
        return ExtendedDynkinType{ExtendedFamily::A, n - 1};
    if (g.has_parallel_edges()) return std::nullopt;
    if (!detail::is_tree(g)) return std::nullopt;
    // D~_4: one degree-4 vertex with four pendant leaves
    if (n == 5) {
        int four = 0, one = 0;
        for (int d : deg) {
            if (d == 4) four++;
            if (d == 1) one++;
        }
        if (four == 1 && one == 4) return ExtendedDynkinType{ExtendedFamily::D, 4};
    }
    // D~_n (n > 4): two degree-3 vertices joined by a path, two leaves each
    {
        std::vector<int> branch;
        bool clean = true;
        for (int v = 0; v < n; v++) {
            if (deg[v] > 3) clean = false;
            if (deg[v] == 3) branch.push_back(v);
        }
        if (clean && branch.size() == 2) {
            auto adj = g.adjacency();
            auto leaves_at = [&](int v) {
                int c = 0;
                for (int w : adj[v])
                    if (deg[w] == 1) c++;
                return c;
            };
            if (leaves_at(branch[0]) == 2 && leaves_at(branch[1]) == 2)
                return ExtendedDynkinType{ExtendedFamily::D, n - 1};
        }
    }
    auto arms = detail::branch_arm_lengths(g);
    if (arms) {
        auto [a, b, c] = *arms;
        if (a == 2 && b == 2 && c == 2) return ExtendedDynkinType{ExtendedFamily::E, 6};
        if (a == 1 && b == 3 && c == 3) return ExtendedDynkinType{ExtendedFamily::E, 7};
        if (a == 1 && b == 2 && c == 5) return ExtendedDynkinType{ExtendedFamily::E, 8};
    }
    return std::nullopt;
}

// Prop-style tilting counts per Dynkin type; all divisions exact.
inline BigNat binomial_nat(int n, int k) {
    if (k < 0 || k > n) throw GraphError("binomial: k out of range");
    BigNat r = 1;
    for (int i = 1; i <= k; i++) {
        r *= (n - k + i);
        BigNat q = r / i;
        if (q * i != r) throw GraphError("binomial: inexact division");
        r = q;
    }
    return r;
}

inline BigNat dynkin_tilt_count(const DynkinType& t) {
    switch (t.family) {
        case DynkinFamily::A: {
            int n = t.rank;
            BigNat num = binomial_nat(2 * n, n);
            BigNat q = num / (n + 1);
            if (q * (n + 1) != num) throw GraphError("catalan: inexact division");
            return q;
        }
        case DynkinFamily::D: {
            int n = t.rank;
            if (n < 4) throw GraphError("dynkin_tilt_count: D rank must be >= 4");
            BigNat num = BigNat(3 * n - 4) * binomial_nat(2 * n - 2, n - 2);
            BigNat q = num / (2 * n - 2);
            if (q * (2 * n - 2) != num) throw GraphError("D count: inexact division");
            return q;
        }
        case DynkinFamily::E:
            if (t.rank == 6) return 418;
            if (t.rank == 7) return 2431;
            if (t.rank == 8) return 17342;
            throw GraphError("dynkin_tilt_count: E rank must be 6..8");
    }
    throw GraphError("unreachable");
}

// Tilting count of a weakly connected quiver via its underlying graph.
// Parallel arrows between a pair (in any combination of directions) mean
// non-Dynkin, hence nullopt.
inline std::optional<BigNat> component_tilt_count(const Quiver& q) {
    if (q.vertex_count() == 0) return std::nullopt;
    Graph under = q.underlying_graph();
    if (under.total_loops() > 0) return std::nullopt;
    if (under.has_parallel_edges()) return std::nullopt;
    auto t = recognize_dynkin(under);
    if (!t) return std::nullopt;
    return dynkin_tilt_count(*t);
}

}  // namespace tilt

#endif
