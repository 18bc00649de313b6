#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tilt/closed_forms.hpp"
#include "tilt/dynkin.hpp"
#include "tilt/graph.hpp"

using namespace tilt;

namespace {

Graph arms_graph(int a, int b, int c) {
    // one center, three paths of the given lengths
    Graph g({"c"});
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int s = 0; s < len; s++) {
            int v = g.add_vertex("v" + std::to_string(next++));
            g.add_edge_idx(prev, v);
            prev = v;
        }
    }
    return g;
}

std::vector<Graph> all_graphs(int n) {
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

}  // namespace

TEST_CASE("dynkin recognition") {
    auto t = recognize_dynkin(families::path_graph(5));
    REQUIRE(t.has_value());
    CHECK(t->family == DynkinFamily::A);
    CHECK(t->rank == 5);

    auto single = recognize_dynkin(families::path_graph(1));
    REQUIRE(single.has_value());
    CHECK(single->rank == 1);

    auto d5 = recognize_dynkin(arms_graph(1, 1, 2));
    REQUIRE(d5.has_value());
    CHECK(d5->family == DynkinFamily::D);
    CHECK(d5->rank == 5);

    auto d4 = recognize_dynkin(arms_graph(1, 1, 1));
    REQUIRE(d4.has_value());
    CHECK(d4->family == DynkinFamily::D);
    CHECK(d4->rank == 4);

    for (int c = 2; c <= 4; c++) {
        auto e = recognize_dynkin(arms_graph(1, 2, c));
        REQUIRE(e.has_value());
        CHECK(e->family == DynkinFamily::E);
        CHECK(e->rank == c + 4);
    }

    CHECK_FALSE(recognize_dynkin(arms_graph(2, 2, 2)).has_value());
    CHECK_FALSE(recognize_dynkin(arms_graph(1, 2, 5)).has_value());
    CHECK_FALSE(recognize_dynkin(families::cycle_graph(4)).has_value());
    CHECK_FALSE(recognize_dynkin(families::kronecker_pair()).has_value());

    Graph disc({"1", "2"});
    CHECK_THROWS_AS(recognize_dynkin(disc), GraphError);
}

TEST_CASE("extended dynkin recognition") {
    auto a3 = recognize_extended_dynkin(families::cycle_graph(4));
    REQUIRE(a3.has_value());
    CHECK(a3->family == ExtendedFamily::A);
    CHECK(a3->rank == 3);

    auto a1 = recognize_extended_dynkin(families::kronecker_pair());
    REQUIRE(a1.has_value());
    CHECK(a1->family == ExtendedFamily::A);
    CHECK(a1->rank == 1);

    auto d4 = recognize_extended_dynkin(families::d4_tilde_graph());
    REQUIRE(d4.has_value());
    CHECK(d4->family == ExtendedFamily::D);
    CHECK(d4->rank == 4);

    // D~_5: two branch vertices joined by an edge, two leaves each
    Graph d5({"a", "b", "1", "2", "3", "4"});
    d5.add_edge("a", "b");
    d5.add_edge("a", "1");
    d5.add_edge("a", "2");
    d5.add_edge("b", "3");
    d5.add_edge("b", "4");
    auto rd5 = recognize_extended_dynkin(d5);
    REQUIRE(rd5.has_value());
    CHECK(rd5->family == ExtendedFamily::D);
    CHECK(rd5->rank == 5);

    for (int r = 6; r <= 8; r++) {
        auto e = recognize_extended_dynkin(families::e_tilde_graph(r));
        REQUIRE(e.has_value());
        CHECK(e->family == ExtendedFamily::E);
        CHECK(e->rank == r);
    }

    CHECK_FALSE(recognize_extended_dynkin(families::path_graph(4)).has_value());
    CHECK_FALSE(recognize_extended_dynkin(arms_graph(1, 1, 3)).has_value());
}

TEST_CASE("plain and extended recognition never both succeed") {
    for (int n = 2; n <= 6; n++)
        for (const auto& g : all_graphs(n)) {
            bool both = recognize_dynkin(g).has_value() &&
                        recognize_extended_dynkin(g).has_value();
            CHECK_FALSE(both);
        }
}

TEST_CASE("tilt counts") {
    CHECK(dynkin_tilt_count({DynkinFamily::A, 3}) == 5);
    CHECK(dynkin_tilt_count({DynkinFamily::D, 4}) == 20);
    CHECK(dynkin_tilt_count({DynkinFamily::D, 5}) == 77);
    CHECK(dynkin_tilt_count({DynkinFamily::E, 6}) == 418);
    CHECK(dynkin_tilt_count({DynkinFamily::E, 7}) == 2431);
    CHECK(dynkin_tilt_count({DynkinFamily::E, 8}) == 17342);

    // A_n count is the n-th Catalan number; check against the convolution
    // recurrence C_0 = 1, C_{n+1} = sum C_i C_{n-i}
    std::vector<BigNat> cat{1};
    for (int n = 0; n < 12; n++) {
        BigNat next = 0;
        for (int i = 0; i <= n; i++) next += cat[i] * cat[n - i];
        cat.push_back(next);
    }
    for (int n = 1; n <= 12; n++)
        CHECK(dynkin_tilt_count({DynkinFamily::A, n}) == cat[n]);
}

TEST_CASE("binomial") {
    CHECK(binomial_nat(4, 2) == 6);
    CHECK(binomial_nat(16, 8) == 12870);
    CHECK(binomial_nat(0, 0) == 1);
    CHECK_THROWS_AS(binomial_nat(3, 4), GraphError);

    // Pascal identity over a range
    for (int n = 1; n <= 40; n++)
        for (int k = 1; k < n; k++)
            CHECK(binomial_nat(n, k) ==
                  binomial_nat(n - 1, k - 1) + binomial_nat(n - 1, k));
}

TEST_CASE("component tilt count") {
    Quiver iso({"1"});
    CHECK(component_tilt_count(iso) == BigNat(1));

    // 1->2<-3->4, underlying A_4
    Quiver a4({"1", "2", "3", "4"});
    a4.add_arrow(0, 1);
    a4.add_arrow(2, 1);
    a4.add_arrow(2, 3);
    CHECK(component_tilt_count(a4) == BigNat(14));

    Quiver kron({"1", "2"});
    kron.add_arrow(0, 1);
    kron.add_arrow(0, 1);
    CHECK_FALSE(component_tilt_count(kron).has_value());

    // orientation blindness: reversing all arrows preserves the count
    CHECK(component_tilt_count(a4.opposite()) == component_tilt_count(a4));

    // non-Dynkin tree
    Quiver e6t(std::vector<VertexId>{"c", "1", "2", "3", "4", "5", "6"});
    e6t.add_arrow(0, 1);
    e6t.add_arrow(1, 2);
    e6t.add_arrow(0, 3);
    e6t.add_arrow(3, 4);
    e6t.add_arrow(0, 5);
    e6t.add_arrow(5, 6);
    CHECK_FALSE(component_tilt_count(e6t).has_value());
}
