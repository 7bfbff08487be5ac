#include <doctest.h>

#include "orcycle/constructions.hpp"
#include "orcycle/graph_io.hpp"
#include "orcycle/oracle.hpp"

using namespace orcycle;

TEST_SUITE("constructions") {

TEST_CASE("blowup spec splits as equally as possible, larger classes first") {
    auto s = blowup_spec(3, 10);
    CHECK(s.class_sizes == std::vector<int>{4, 3, 3});
    CHECK(s.class_offsets == std::vector<int>{0, 4, 7});
    CHECK(s.class_of(0) == 0);
    CHECK(s.class_of(4) == 1);
    CHECK(s.class_of(9) == 2);
    CHECK_THROWS_AS(blowup_spec(2, 10), Error);
    CHECK_THROWS_AS(blowup_spec(4, 3), Error);
}

TEST_CASE("blowup_cycle degrees and cycle spectrum") {
    auto g = blowup_cycle(3, 9);
    CHECK(g.degree_summary().min_semi == 3);
    CHECK(g.edge_count() == 27);
    CHECK(has_cycle_exact(g, 4).status == SearchStatus::absent);
    CHECK(has_cycle_exact(g, 5).status == SearchStatus::absent);
    CHECK(has_cycle_exact(g, 3).status == SearchStatus::found);

    CHECK(blowup_cycle(3, 10).degree_summary().min_semi == 3);

    auto q = blowup_cycle(4, 8);
    CHECK(has_cycle_exact(q, 6).status == SearchStatus::absent);
    CHECK(has_cycle_exact(q, 4).status == SearchStatus::found);
    CHECK(has_cycle_exact(q, 8).status == SearchStatus::found);
}

TEST_CASE("blowup_cycle edges advance the class index by exactly one") {
    for (auto [k, n] : {std::pair{3, 9}, {3, 11}, {4, 13}, {5, 17}}) {
        auto g = blowup_cycle(k, n);
        auto spec = blowup_spec(k, n);
        for (auto [u, v] : g.edges()) CHECK(spec.class_of(v) == (spec.class_of(u) + 1) % k);
        CHECK(g.degree_summary().min_semi == n / k);
    }
}

TEST_CASE("extremal_3cycle_vertex matches its degree contract") {
    for (int m : {2, 3, 4}) {
        auto [g, u] = extremal_3cycle_vertex(m);
        const int n = 5 * m - 1;
        REQUIRE(g.order() == n);
        CHECK(g.degree_summary().min_semi == 2 * m - 1);
        CHECK(g.degree_summary().min_semi == 2 * n / 5);
        // u is not on any 3-cycle: nothing in N+(u) reaches N-(u) directly
        CHECK(has_cycle_exact(g, 3, u).status == SearchStatus::absent);
        for (Vertex b : g.out(u)) CHECK(!g.out(b).intersects(g.in(u)));
    }
    SUBCASE("m=2 class degrees") {
        auto [g, u] = extremal_3cycle_vertex(2);
        // a vertex of C sees all of A out and all of B in
        Vertex c = 2 * (2 * 2 - 1); // first vertex of C
        CHECK(g.out_degree(c) == 3);
        CHECK(g.in_degree(c) == 3);
        CHECK(g.out_degree(u) == 3);
        CHECK(g.in_degree(u) == 3);
    }
    CHECK_THROWS_AS(extremal_3cycle_vertex(1), Error);
}

TEST_CASE("blowup_with_waypoint pins cycles through u to length 1 mod 3") {
    for (int n : {9, 10, 12}) {
        auto [g, u] = blowup_with_waypoint(n);
        REQUIRE(g.order() == n);
        CHECK(g.degree_summary().min_semi == (n - 1) / 3);
        CHECK(has_cycle_exact(g, 6, u).status == SearchStatus::absent);
        if (n >= 12) CHECK(has_cycle_exact(g, 7, u).status == SearchStatus::found);
        CHECK(has_cycle_exact(g, 5, u).status == SearchStatus::absent);
        CHECK(has_cycle_exact(g, 4, u).status == SearchStatus::found);
    }
}

TEST_CASE("rotational_tournament") {
    CHECK(rotational_tournament(3) == OrientedGraph::from_edge_list(
                                          3, {{0, 1}, {1, 2}, {2, 0}}, Mode::oriented));
    auto r5 = rotational_tournament(5);
    CHECK(r5.degree_summary().min_semi == 2);
    auto r7 = rotational_tournament(7);
    CHECK(r7.degree_summary().min_semi == 3);
    for (Vertex v = 0; v < 7; ++v) {
        CHECK(r7.out_degree(v) == 3);
        CHECK(r7.in_degree(v) == 3);
    }
    // underlying graph complete
    CHECK(r7.edge_count() == 21);
    CHECK_THROWS_AS(rotational_tournament(4), Error);
}

TEST_CASE("butterfly gadget carries the three x->y paths") {
    auto g = butterfly_gadget();
    CHECK(g.order() == 5);
    CHECK(g.edge_count() == 6);
    // lengths 2, 3, 4 from x = 0 to y = 4
    CHECK((g.edge(0, 2) && g.edge(2, 4)));
    CHECK((g.edge(0, 1) && g.edge(1, 2) && g.edge(2, 4)));
    CHECK((g.edge(0, 1) && g.edge(1, 2) && g.edge(2, 3) && g.edge(3, 4)));
}

TEST_CASE("complete_bipartite_digraph") {
    auto g4 = complete_bipartite_digraph(4);
    CHECK(g4.degree_summary().min_semi == 2);
    CHECK(has_cycle_exact(g4, 3).status == SearchStatus::absent);
    CHECK(has_cycle_exact(g4, 4).status == SearchStatus::found);
    CHECK(complete_bipartite_digraph(5).degree_summary().min_semi == 2);
    CHECK(!has_closed_walk(complete_bipartite_digraph(6), 5));
    CHECK_THROWS_AS(complete_bipartite_digraph(1), Error);
}

TEST_CASE("random_degree_conditioned meets its degree floor") {
    auto g = random_degree_conditioned(60, 0.37, 1);
    CHECK(g.degree_summary().min_semi >= 22);
    auto h = random_degree_conditioned(9, 1.0 / 3.0, 7);
    CHECK(h.degree_summary().min_semi >= 3);
    CHECK_THROWS_AS(random_degree_conditioned(20, 0.51, 1), Error);
    try {
        random_degree_conditioned(20, 0.5, 1); // 10 > (20-1)/2
        FAIL("expected infeasible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::infeasible);
    }
}

TEST_CASE("generators are deterministic") {
    CHECK(to_edge_list_text(blowup_cycle(3, 11)) == to_edge_list_text(blowup_cycle(3, 11)));
    CHECK(to_edge_list_text(random_degree_conditioned(30, 0.35, 5)) ==
          to_edge_list_text(random_degree_conditioned(30, 0.35, 5)));
    CHECK(to_edge_list_text(random_degree_conditioned(30, 0.35, 5)) !=
          to_edge_list_text(random_degree_conditioned(30, 0.35, 6)));
}

} // TEST_SUITE
