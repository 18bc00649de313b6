#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tilt/classifier.hpp"
#include "tilt/closed_forms.hpp"
#include "tilt/graph.hpp"

using namespace tilt;

namespace {

std::vector<Graph> all_connected(int n) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++) all.push_back({i, j});
    std::vector<VertexId> names;
    for (int i = 1; i <= n; i++) names.push_back(std::to_string(i));
    std::vector<Graph> out;
    for (unsigned long long s = 0; s < (1ULL << all.size()); s++) {
        Graph g(names);
        for (size_t e = 0; e < all.size(); e++)
            if ((s >> e) & 1) g.add_edge_idx(all[e].first, all[e].second);
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<VertexId> names(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); i++) names[perm[i]] = g.vertices()[i];
    Graph out(names);
    for (auto [u, v] : g.edges()) out.add_edge(g.vertex_name(u), g.vertex_name(v));
    return out;
}

}  // namespace

TEST_CASE("list families classify to themselves") {
    CHECK(classify(families::path_graph(7)).label == FamilyLabel::A(7));
    CHECK(classify(families::path_graph(1)).label == FamilyLabel::A(1));
    CHECK(classify(families::d_graph(6)).label == FamilyLabel::D(6));
    CHECK(classify(families::e_graph(6)).label == FamilyLabel::E(6));
    CHECK(classify(families::e_graph(7)).label == FamilyLabel::E(7));
    CHECK(classify(families::e_graph(8)).label == FamilyLabel::E(8));
    CHECK(classify(families::cycle_graph(3)).label == FamilyLabel::AffineA(3));
    CHECK(classify(families::cycle_graph(5)).label == FamilyLabel::AffineA(5));
    CHECK(classify(families::family_I(6)).label == FamilyLabel::I(6));
    CHECK(classify(families::family_I(4)).label == FamilyLabel::I(4));
    for (int n = 5; n <= 8; n++)
        CHECK(classify(families::family_II(n)).label == FamilyLabel::II(n));
    CHECK(classify(families::family_III()).label == FamilyLabel::III());
    CHECK(classify(families::family_IV()).label == FamilyLabel::IV());
    CHECK(classify(families::family_V()).label == FamilyLabel::V());
}

TEST_CASE("out-of-list graphs with verified witnesses") {
    std::vector<Graph> bad;
    bad.push_back(families::cycle_graph(4));          // even cycle
    bad.push_back(families::kronecker_pair());        // 2-cycle
    bad.push_back(families::e_tilde_graph(6));        // non-Dynkin tree
    bad.push_back(families::e_tilde_graph(7));
    bad.push_back(families::e_tilde_graph(8));
    bad.push_back(families::d4_tilde_graph());
    bad.push_back(families::two_triangles_shared_vertex());
    // II_n shape beyond n=8: triangle, pendant at 2, tail of length 5 at 3
    {
        Graph g = families::family_II(8);
        int v9 = g.add_vertex("9");
        g.add_edge_idx(g.index_of("8"), v9);
        bad.push_back(g);
    }
    // I-shape on a 7-cycle (only 3- and 5-cycles admit tails)
    {
        Graph g = families::cycle_graph(7);
        int v8 = g.add_vertex("8");
        g.add_edge_idx(0, v8);
        bad.push_back(g);
    }
    // triangle with length-3 and length-2 tails (V allows only 2 and 2)
    {
        Graph g = families::cycle_graph(3);
        int a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
        int d = g.add_vertex("d"), e = g.add_vertex("e");
        g.add_edge_idx(0, a);
        g.add_edge_idx(a, b);
        g.add_edge_idx(b, c);
        g.add_edge_idx(1, d);
        g.add_edge_idx(d, e);
        bad.push_back(g);
    }
    for (const auto& g : bad) {
        auto r = classify(g);
        CHECK_FALSE(r.label.in_list());
        REQUIRE(r.witness.has_value());
        CHECK(verify_witness(g, *r.witness));
    }
}

TEST_CASE("brute force basics") {
    CHECK(brute_force_finite(families::e_graph(8)).finite);
    CHECK(brute_force_finite(families::cycle_graph(3)).finite);
    auto r = brute_force_finite(families::e_tilde_graph(6));
    CHECK_FALSE(r.finite);
    REQUIRE(r.component.has_value());
    CHECK_FALSE(recognize_dynkin(r.component->underlying_graph()).has_value());
}

TEST_CASE("classifier agrees with brute force, exhaustive to 5 vertices") {
    for (int n = 1; n <= 5; n++)
        for (const auto& g : all_connected(n)) {
            auto c = classify(g);
            auto b = brute_force_finite(g);
            CHECK_MESSAGE(c.label.in_list() == b.finite, c.label.to_string());
            if (!c.label.in_list()) {
                REQUIRE(c.witness.has_value());
                CHECK(verify_witness(g, *c.witness));
            }
        }
}

TEST_CASE("classification is relabeling invariant") {
    std::vector<Graph> gs{families::family_II(7), families::family_III(),
                          families::family_V(),   families::e_tilde_graph(7),
                          families::d_graph(6),   families::two_triangles_shared_vertex()};
    std::mt19937 rng(23);
    for (const auto& g : gs) {
        auto base = classify(g).label;
        std::vector<int> perm(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); i++) perm[i] = i;
        for (int t = 0; t < 10; t++) {
            std::shuffle(perm.begin(), perm.end(), rng);
            Graph h = permuted(g, perm);
            CHECK(classify(h).label == base);
        }
    }
}

TEST_CASE("loops do not affect classification") {
    Graph g = families::family_I(5);
    g.add_loops("1", 2);
    g.add_loops("4", 1);
    CHECK(classify(g).label == FamilyLabel::I(5));
}

TEST_CASE("triangle is affine A, not I_3") {
    auto r = classify(families::cycle_graph(3));
    CHECK(r.label.kind == FamilyLabel::Kind::AffineAOdd);
    CHECK(r.label.n == 3);
}

TEST_CASE("subtree correspondence") {
    Graph e({"1", "2"});
    e.add_edge("1", "2");
    CHECK(verify_subtree_correspondence(e));
    CHECK(verify_subtree_correspondence(families::cycle_graph(3)));
    CHECK(verify_subtree_correspondence(families::path_graph(4)));
    CHECK(verify_subtree_correspondence(families::family_II(6)));
    CHECK_THROWS_AS(verify_subtree_correspondence(families::cycle_graph(4)), GraphError);
}
