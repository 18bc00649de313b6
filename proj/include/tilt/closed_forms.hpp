#ifndef TILT_CLOSED_FORMS_HPP
#define TILT_CLOSED_FORMS_HPP

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tilt/dynkin.hpp"
#include "tilt/graph.hpp"

namespace tilt {

using BigRat = boost::multiprecision::cpp_rational;

// Family membership per the finiteness classification. AffineAOdd(n) is
// the odd n-cycle (n vertices); I/II carry their vertex count.
struct FamilyLabel {
    enum class Kind { A, D, E6, E7, E8, AffineAOdd, I, II, III, IV, V, NotInList };
    Kind kind = Kind::NotInList;
    int n = 0;  // parameter for A, D, AffineAOdd, I, II
    std::string reason;  // for NotInList

    static FamilyLabel A(int n) { return {Kind::A, n, ""}; }
    static FamilyLabel D(int n) { return {Kind::D, n, ""}; }
    static FamilyLabel E(int rank) {
        return {rank == 6 ? Kind::E6 : rank == 7 ? Kind::E7 : Kind::E8, rank, ""};
    }
    static FamilyLabel AffineA(int n) { return {Kind::AffineAOdd, n, ""}; }
    static FamilyLabel I(int n) { return {Kind::I, n, ""}; }
    static FamilyLabel II(int n) { return {Kind::II, n, ""}; }
    static FamilyLabel III() { return {Kind::III, 6, ""}; }
    static FamilyLabel IV() { return {Kind::IV, 6, ""}; }
    static FamilyLabel V() { return {Kind::V, 7, ""}; }
    static FamilyLabel NotInList(std::string why) {
        return {Kind::NotInList, 0, std::move(why)};
    }

    bool in_list() const { return kind != Kind::NotInList; }

    bool operator==(const FamilyLabel& o) const {
        return kind == o.kind && (n == o.n || !needs_param());
    }
    bool needs_param() const {
        return kind == Kind::A || kind == Kind::D || kind == Kind::AffineAOdd ||
               kind == Kind::I || kind == Kind::II;
    }

    std::string to_string() const {
        switch (kind) {
            case Kind::A: return "A" + std::to_string(n);
            case Kind::D: return "D" + std::to_string(n);
            case Kind::E6: return "E6";
            case Kind::E7: return "E7";
            case Kind::E8: return "E8";
            case Kind::AffineAOdd: return "Atilde" + std::to_string(n - 1);
            case Kind::I: return "I" + std::to_string(n);
            case Kind::II: return "II" + std::to_string(n);
            case Kind::III: return "III";
            case Kind::IV: return "IV";
            case Kind::V: return "V";
            case Kind::NotInList: return "NotInList(" + reason + ")";
        }
        return "?";
    }
};

inline BigNat binomial(int n, int k) { return binomial_nat(n, k); }

inline BigNat catalan(int n) {
    BigNat num = binomial(2 * n, n);
    BigNat q = num / (n + 1);
    if (q * (n + 1) != num) throw GraphError("catalan: inexact division");
    return q;
}

inline BigNat pow2(int e) {
    BigNat r = 1;
    return r << e;
}

// a_n = 6*4^(n-2) - 2*C(2(n-2), n-2), n >= 4
inline BigNat a_formula(int n) {
    if (n < 4) throw GraphError("a_n needs n >= 4");
    return 6 * pow2(2 * (n - 2)) - 2 * binomial(2 * (n - 2), n - 2);
}

// b_n = 6*4^(n-2) + 2*C(2n,n) - 4*C(2(n-1),n-1) - 4*C(2(n-2),n-2), n >= 4
// (coefficients fitted to, and checked against, exact enumeration)
inline BigNat b_formula(int n) {
    if (n < 4) throw GraphError("b_n needs n >= 4");
    return 6 * pow2(2 * (n - 2)) + 2 * binomial(2 * n, n) -
           4 * binomial(2 * (n - 1), n - 1) - 4 * binomial(2 * (n - 2), n - 2);
}

inline BigNat closed_form(const FamilyLabel& f) {
    using K = FamilyLabel::Kind;
    switch (f.kind) {
        case K::A:
            if (f.n < 1) throw GraphError("closed_form: A needs n >= 1");
            return binomial(2 * f.n, f.n);
        case K::D: return a_formula(f.n);
        case K::E6: return 1700;
        case K::E7: return 8872;
        case K::E8: return 54066;
        case K::AffineAOdd:
            if (f.n < 3 || f.n % 2 == 0)
                throw GraphError("closed_form: affine A needs odd n >= 3");
            return pow2(2 * f.n - 1);
        case K::I: return b_formula(f.n);
        case K::II:
            switch (f.n) {
                case 5: return 632;
                case 6: return 2936;
                case 7: return 14024;
                case 8: return 75240;
                default: throw GraphError("closed_form: II needs 5 <= n <= 8");
            }
        case K::III: return 3288;
        case K::IV: return 4056;
        case K::V: return 17328;
        case K::NotInList: throw GraphError("closed_form: not a list family");
    }
    throw GraphError("unreachable");
}

namespace detail {
inline void assert_integral(const BigRat& x, const char* what) {
    if (boost::multiprecision::denominator(x) != 1)
        throw GraphError(std::string("non-integral intermediate in ") + what);
}
}  // namespace detail

// The case-D summation identity; every fractional term is checked to be
// integral before it enters the sum. Must equal a_n.
inline BigNat d_proof_expression(int n) {
    if (n < 4) throw GraphError("d_proof_expression needs n >= 4");
    BigRat total = 0;
    total += 2 * BigRat(binomial(2 * (n - 1), n - 1));
    total -= BigRat(binomial(2 * (n - 2), n - 2));
    total += 5 * BigRat(binomial(2 * (n - 3), n - 3));
    {
        BigRat t = BigRat(3 * n - 4, n - 1) * BigRat(binomial(2 * (n - 1), n - 2));
        detail::assert_integral(t, "d_proof_expression (J6 term)");
        total += t;
    }
    for (int l = 4; l <= n - 1; l++) {
        BigRat t = BigRat(3 * l - 4, 2 * l - 2) * BigRat(binomial(2 * l - 2, l - 2)) *
                   BigRat(binomial(2 * (n - l), n - l));
        detail::assert_integral(t, "d_proof_expression (J5 term)");
        total += t;
    }
    detail::assert_integral(total, "d_proof_expression (total)");
    return boost::multiprecision::numerator(total);
}

// -- family graph constructors (vertex numbering follows the usual
//    presentations: cycle first, then tails) ----------------------------

namespace families {

inline std::vector<VertexId> number_names(int n) {
    std::vector<VertexId> v;
    for (int i = 1; i <= n; i++) v.push_back(std::to_string(i));
    return v;
}

inline Graph path_graph(int n) {
    Graph g(number_names(n));
    for (int i = 0; i + 1 < n; i++) g.add_edge_idx(i, i + 1);
    return g;
}

// 1 and 2 hang off 3; 3-4-...-n is a path
inline Graph d_graph(int n) {
    if (n < 4) throw GraphError("d_graph needs n >= 4");
    Graph g(number_names(n));
    g.add_edge_idx(0, 2);
    g.add_edge_idx(1, 2);
    for (int i = 2; i + 1 < n; i++) g.add_edge_idx(i, i + 1);
    return g;
}

inline Graph e_graph(int rank) {
    if (rank < 6 || rank > 8) throw GraphError("e_graph needs rank 6..8");
    Graph g(number_names(rank));
    for (int i = 0; i + 2 < rank; i++) g.add_edge_idx(i, i + 1);
    g.add_edge_idx(2, rank - 1);  // branch at vertex 3
    return g;
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw GraphError("cycle_graph needs n >= 3");
    Graph g(number_names(n));
    for (int i = 0; i + 1 < n; i++) g.add_edge_idx(i, i + 1);
    g.add_edge_idx(n - 1, 0);
    return g;
}

// triangle {1,2,3} plus the path 3-4-...-n
inline Graph family_I(int n) {
    if (n < 4) throw GraphError("family_I needs n >= 4");
    Graph g(number_names(n));
    g.add_edge_idx(0, 1);
    g.add_edge_idx(0, 2);
    g.add_edge_idx(1, 2);
    for (int i = 2; i + 1 < n; i++) g.add_edge_idx(i, i + 1);
    return g;
}

// triangle {1,2,3}, leaf 4 at 2, path 3-5-...-n
inline Graph family_II(int n) {
    if (n < 5 || n > 8) throw GraphError("family_II needs 5 <= n <= 8");
    Graph g(number_names(n));
    g.add_edge_idx(0, 1);
    g.add_edge_idx(0, 2);
    g.add_edge_idx(1, 2);
    g.add_edge_idx(1, 3);
    g.add_edge_idx(2, 4);
    for (int i = 4; i + 1 < n; i++) g.add_edge_idx(i, i + 1);
    return g;
}

// 5-cycle {2,3,4,6,5} with leaf 1 at 2
inline Graph family_III() {
    Graph g(number_names(6));
    g.add_edge("1", "2");
    g.add_edge("2", "3");
    g.add_edge("2", "5");
    g.add_edge("3", "4");
    g.add_edge("4", "6");
    g.add_edge("5", "6");
    return g;
}

// triangle {2,3,4} with a leaf at each cycle vertex
inline Graph family_IV() {
    Graph g(number_names(6));
    g.add_edge("1", "2");
    g.add_edge("2", "3");
    g.add_edge("2", "4");
    g.add_edge("3", "4");
    g.add_edge("3", "5");
    g.add_edge("4", "6");
    return g;
}

// triangle {1,2,3} with length-2 tails 2-4-5 and 3-6-7
inline Graph family_V() {
    Graph g(number_names(7));
    g.add_edge("1", "2");
    g.add_edge("1", "3");
    g.add_edge("2", "3");
    g.add_edge("2", "4");
    g.add_edge("3", "6");
    g.add_edge("4", "5");
    g.add_edge("6", "7");
    return g;
}

// star with four leaves (the affine D4 tree)
inline Graph d4_tilde_graph() {
    Graph g(number_names(5));
    for (int i = 1; i < 5; i++) g.add_edge_idx(0, i);
    return g;
}

// trees with arm profiles {2,2,2}, {1,3,3}, {1,2,5}
inline Graph e_tilde_graph(int rank) {
    std::array<std::array<int, 3>, 3> arms{{{2, 2, 2}, {1, 3, 3}, {1, 2, 5}}};
    if (rank < 6 || rank > 8) throw GraphError("e_tilde_graph needs rank 6..8");
    auto a = arms[rank - 6];
    Graph g(number_names(rank + 1));
    int next = 1;
    for (int arm = 0; arm < 3; arm++) {
        int prev = 0;
        for (int step = 0; step < a[arm]; step++) {
            g.add_edge_idx(prev, next);
            prev = next++;
        }
    }
    return g;
}

inline Graph kronecker_pair() {
    Graph g(number_names(2));
    g.add_edge_idx(0, 1);
    g.add_edge_idx(0, 1);
    return g;
}

inline Graph two_triangles_shared_vertex() {
    Graph g(number_names(5));
    g.add_edge("1", "2");
    g.add_edge("2", "3");
    g.add_edge("1", "3");
    g.add_edge("1", "4");
    g.add_edge("4", "5");
    g.add_edge("1", "5");
    return g;
}

// construct the graph for any in-list family label
inline Graph for_label(const FamilyLabel& f) {
    using K = FamilyLabel::Kind;
    switch (f.kind) {
        case K::A: return path_graph(f.n);
        case K::D: return d_graph(f.n);
        case K::E6: return e_graph(6);
        case K::E7: return e_graph(7);
        case K::E8: return e_graph(8);
        case K::AffineAOdd: return cycle_graph(f.n);
        case K::I: return family_I(f.n);
        case K::II: return family_II(f.n);
        case K::III: return family_III();
        case K::IV: return family_IV();
        case K::V: return family_V();
        case K::NotInList: break;
    }
    throw GraphError("for_label: not a list family");
}

// named graphs for the CLI (--builtin)
inline std::optional<Graph> builtin_graph(const std::string& name) {
    auto num_after = [&](size_t pos) -> std::optional<int> {
        if (pos >= name.size()) return std::nullopt;
        for (size_t i = pos; i < name.size(); i++)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
        return std::stoi(name.substr(pos));
    };
    try {
        if (name == "III") return family_III();
        if (name == "IV") return family_IV();
        if (name == "V") return family_V();
        if (name == "D4tilde") return d4_tilde_graph();
        if (name == "Kronecker") return kronecker_pair();
        if (name == "TwoTriangles") return two_triangles_shared_vertex();
        if (name.starts_with("Atilde")) {
            if (auto n = num_after(6)) return cycle_graph(*n + 1);
        }
        if (name.starts_with("E") && name.ends_with("tilde")) {
            if (name.size() == 7) return e_tilde_graph(name[1] - '0');
        }
        if (name.starts_with("II")) {
            if (auto n = num_after(2)) return family_II(*n);
        }
        if (name.starts_with("I")) {
            if (auto n = num_after(1)) return family_I(*n);
        }
        if (name.starts_with("A")) {
            if (auto n = num_after(1)) return path_graph(*n);
        }
        if (name.starts_with("D")) {
            if (auto n = num_after(1)) return d_graph(*n);
        }
        if (name.starts_with("E")) {
            if (auto n = num_after(1)) return e_graph(*n);
        }
        if (name.starts_with("C")) {  // Cn = n-cycle
            if (auto n = num_after(1)) return cycle_graph(*n);
        }
    } catch (const GraphError&) {
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace families

}  // namespace tilt

#endif
