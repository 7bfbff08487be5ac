#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "orcycle/constructions.hpp"
#include "orcycle/graph_io.hpp"
#include "orcycle/oracle.hpp"
#include "orcycle/rng.hpp"

using namespace orcycle;

namespace {

OrientedGraph random_oriented(int n, double p, std::uint64_t seed) {
    SplitRng rng(seed, 11);
    std::vector<std::pair<Vertex, Vertex>> es;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.unit() < p) es.emplace_back(rng.coin() ? std::pair{u, v} : std::pair{v, u});
    return OrientedGraph::from_edge_list(n, es, Mode::oriented);
}

// reference: enumerate all vertex subsets of size ell and all cyclic orders
bool cycle_by_permutations(const OrientedGraph& g, int ell, std::optional<Vertex> through) {
    const int n = g.order();
    if (ell > n) return false;
    std::vector<int> comb(static_cast<std::size_t>(ell));
    std::iota(comb.begin(), comb.end(), 0);
    while (true) {
        bool contains = !through.has_value();
        for (int i = 0; i < ell; ++i)
            if (through && comb[static_cast<std::size_t>(i)] == *through) contains = true;
        if (contains) {
            std::vector<Vertex> perm(comb.begin(), comb.end());
            do {
                bool ok = true;
                for (int i = 0; i < ell && ok; ++i)
                    ok = g.edge(perm[static_cast<std::size_t>(i)],
                                perm[static_cast<std::size_t>((i + 1) % ell)]);
                if (ok) return true;
            } while (std::next_permutation(perm.begin() + 1, perm.end()));
        }
        // next combination of {0..n-1} choose ell
        int i = ell - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - ell + i) --i;
        if (i < 0) break;
        comb[static_cast<std::size_t>(i)]++;
        for (int j = i + 1; j < ell; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(j - 1)] + 1;
    }
    return false;
}

// reference: closed-walk decision by stepwise frontier sets, one chain per start
bool closed_walk_by_frontier(const OrientedGraph& g, int ell) {
    for (Vertex s = 0; s < g.order(); ++s) {
        VertexSet frontier(g.order());
        frontier.set(s);
        for (int i = 0; i < ell; ++i) frontier = out_neighborhood(g, frontier);
        if (frontier.test(s)) return true;
    }
    return false;
}

} // namespace

TEST_SUITE("oracle") {

TEST_CASE("has_cycle_exact on the extremal fixtures") {
    auto b = blowup_cycle(3, 9);
    CHECK(has_cycle_exact(b, 4).status == SearchStatus::absent);
    auto six = has_cycle_exact(b, 6, 0);
    REQUIRE(six.status == SearchStatus::found);
    CHECK(six.witness->validate(b));
    CHECK(six.witness->length() == 6);

    auto [eg, u] = extremal_3cycle_vertex(2);
    CHECK(has_cycle_exact(eg, 3, u).status == SearchStatus::absent);
    CHECK(has_cycle_exact(eg, 3).status == SearchStatus::found);
}

TEST_CASE("has_cycle_exact agrees with permutation brute force") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = random_oriented(7, 0.45, seed);
        for (int ell = 3; ell <= 7; ++ell) {
            auto r = has_cycle_exact(g, ell);
            REQUIRE(r.status != SearchStatus::budget_exceeded);
            CHECK((r.status == SearchStatus::found) == cycle_by_permutations(g, ell, {}));
            if (r.witness) CHECK(r.witness->validate(g));
            auto rt = has_cycle_exact(g, ell, 0);
            REQUIRE(rt.status != SearchStatus::budget_exceeded);
            CHECK((rt.status == SearchStatus::found) == cycle_by_permutations(g, ell, 0));
            if (rt.witness) {
                CHECK(rt.witness->validate(g));
                CHECK(rt.witness->through == 0);
            }
        }
    }
}

TEST_CASE("budget exhaustion is reported, not conflated with absence") {
    auto r7 = rotational_tournament(7);
    auto r = has_cycle_exact(r7, 7, std::nullopt, SearchBudget{1});
    CHECK(r.status == SearchStatus::budget_exceeded);
}

TEST_CASE("has_closed_walk basics and frontier cross-check") {
    auto t = rotational_tournament(3);
    CHECK(has_closed_walk(t, 6));
    CHECK(!has_closed_walk(t, 4));
    CHECK(!has_closed_walk(complete_bipartite_digraph(6), 5));
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_oriented(8, 0.3, 100 + seed);
        for (int ell = 1; ell <= 10; ++ell)
            CHECK(has_closed_walk(g, ell) == closed_walk_by_frontier(g, ell));
    }
}

TEST_CASE("extract_closed_walk returns a valid walk exactly when one exists") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = random_oriented(9, 0.35, 300 + seed);
        for (int ell : {3, 4, 5, 6, 9, 12}) {
            auto w = extract_closed_walk(g, ell);
            CHECK(w.has_value() == has_closed_walk(g, ell));
            if (w) {
                CHECK(static_cast<int>(w->size()) == ell + 1);
                CHECK(w->front() == w->back());
                for (int i = 0; i < ell; ++i)
                    CHECK(g.edge((*w)[static_cast<std::size_t>(i)],
                                 (*w)[static_cast<std::size_t>(i + 1)]));
            }
        }
    }
}

TEST_CASE("cycle implies closed walk on the full n <= 4 universe") {
    for (int n = 3; n <= 4; ++n) {
        enumerate_oriented(n, std::nullopt, [&](const OrientedGraph& g) {
            for (int ell = 3; ell <= n; ++ell)
                if (has_cycle_exact(g, ell).status == SearchStatus::found)
                    CHECK(has_closed_walk(g, ell));
        });
    }
}

TEST_CASE("contains_pattern") {
    auto tt3 = OrientedGraph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}}, Mode::oriented);
    auto hit = contains_pattern(tt3, CyclePattern("ffb"));
    REQUIRE(hit.status == SearchStatus::found);
    const auto& img = *hit.embedding;
    CHECK(tt3.edge(img[0], img[1]));
    CHECK(tt3.edge(img[1], img[2]));
    CHECK(tt3.edge(img[0], img[2]));

    CHECK(contains_pattern(blowup_cycle(3, 9), CyclePattern("ffb")).status ==
          SearchStatus::absent);

    // the transitive triangle is not a directed one
    CHECK(contains_pattern(tt3, CyclePattern("fff")).status == SearchStatus::absent);

    auto r5 = rotational_tournament(5);
    for (const char* s : {"ffffb", "fffbf", "ffbff", "fbfff", "bffff"}) {
        auto r = contains_pattern(r5, CyclePattern(s));
        REQUIRE(r.status != SearchStatus::budget_exceeded);
        if (r.embedding) {
            CyclePattern p(s);
            for (int i = 0; i < 5; ++i) {
                Vertex a = (*r.embedding)[static_cast<std::size_t>(i)];
                Vertex b = (*r.embedding)[static_cast<std::size_t>((i + 1) % 5)];
                CHECK((p.at(i) == 'f' ? r5.edge(a, b) : r5.edge(b, a)));
            }
        }
    }
}

TEST_CASE("enumerate_oriented counts") {
    CHECK(count_oriented(2) == 3);
    CHECK(count_oriented(3) == 27);
    CHECK(count_oriented(4) == 729);
    int triangles = 0;
    enumerate_oriented(3, std::nullopt, [&](const OrientedGraph& g) {
        if (has_cycle_exact(g, 3).status == SearchStatus::found) ++triangles;
    });
    CHECK(triangles == 2);
    // the pushed-down degree filter is exact: compare against post-hoc filtering
    std::uint64_t post_hoc = 0;
    enumerate_oriented(4, std::nullopt, [&](const OrientedGraph& g) {
        if (g.degree_summary().min_semi >= 1) ++post_hoc;
    });
    CHECK(count_oriented(4, 1) == post_hoc);
    CHECK(count_oriented(4, 2) == 0); // degree cap: (4-1)/2 < 2
    CHECK_THROWS_AS(enumerate_oriented(7, std::nullopt, [](const OrientedGraph&) {}), Error);
}

TEST_CASE("enumerate_digraphs counts") {
    std::uint64_t c = 0;
    enumerate_digraphs(2, std::nullopt, [&](const OrientedGraph&) { ++c; });
    CHECK(c == 4);
    c = 0;
    enumerate_digraphs(3, std::nullopt, [&](const OrientedGraph&) { ++c; });
    CHECK(c == 64);
}

TEST_CASE("girth over the small universe satisfies the ceil(n/d) bound") {
    for (int n = 2; n <= 5; ++n) {
        enumerate_oriented(n, std::nullopt, [&](const OrientedGraph& g) {
            const int dplus = g.degree_summary().min_out;
            if (dplus < 1) return;
            auto girth = shortest_cycle(g);
            REQUIRE(girth.has_value());
            CHECK(*girth <= (n + dplus - 1) / dplus);
        });
    }
}

TEST_CASE("shortest_cycle fixtures") {
    CHECK(shortest_cycle(blowup_cycle(3, 9)) == 3);
    CHECK(shortest_cycle(rotational_tournament(7)) == 3);
    CHECK(!shortest_cycle(OrientedGraph::from_edge_list(5, {{0, 1}, {1, 2}}, Mode::oriented))
               .has_value());
    // oriented graphs never have 2-cycles; digraphs can
    CHECK(shortest_cycle(complete_bipartite_digraph(4)) == 2);
    std::vector<std::pair<Vertex, Vertex>> c7;
    for (int i = 0; i < 7; ++i) c7.emplace_back(i, (i + 1) % 7);
    CHECK(shortest_cycle(OrientedGraph::from_edge_list(7, c7, Mode::oriented)) == 7);
}

TEST_CASE("threshold_search exhaustive cells") {
    auto r34 = threshold_search(3, 4);
    CHECK(r34.exhaustive);
    CHECK(r34.lower == r34.upper);
    CHECK(r34.lower == 2); // C4 is triangle-free at semidegree 1, and the cap is 1
    REQUIRE(r34.lower_witness.has_value());
    CHECK(r34.lower_witness->degree_summary().min_semi == r34.witness_min_semidegree);
    CHECK(has_cycle_exact(*r34.lower_witness, 3).status == SearchStatus::absent);

    auto r35 = threshold_search(3, 5);
    CHECK(r35.exhaustive);
    CHECK(r35.lower == 2); // the directed pentagon is triangle-free at semidegree 1

    auto r56 = threshold_search(5, 6);
    CHECK(r56.exhaustive);
    CHECK(r56.lower == 3); // the 3-cycle blow-up on 6 hits the semidegree cap with no 5-cycle
    CHECK(has_cycle_exact(*r56.lower_witness, 5).status == SearchStatus::absent);
    CHECK(r56.witness_min_semidegree == 2);
}

TEST_CASE("threshold_search is deterministic across job counts") {
    for (auto [ell, n] : {std::pair{3, 5}, {4, 5}, {3, 6}}) {
        ThresholdConfig one, four;
        one.jobs = 1;
        four.jobs = 4;
        auto a = threshold_search(ell, n, one);
        auto b = threshold_search(ell, n, four);
        CHECK(a.lower == b.lower);
        CHECK(a.upper == b.upper);
        CHECK(a.witness_min_semidegree == b.witness_min_semidegree);
        REQUIRE(a.lower_witness.has_value());
        REQUIRE(b.lower_witness.has_value());
        CHECK(to_edge_list_text(*a.lower_witness) == to_edge_list_text(*b.lower_witness));
    }
}

TEST_CASE("threshold_search lemma-backed record for (4, 7)") {
    auto r = threshold_search(4, 7);
    CHECK(!r.exhaustive);
    CHECK(r.lower == 3);
    CHECK(r.upper == 3);
    CHECK(r.witness_min_semidegree == 2);
    CHECK(r.upper_provenance == "lemma:through-vertex");
    REQUIRE(r.lower_witness.has_value());
    CHECK(has_cycle_exact(*r.lower_witness, 4).status == SearchStatus::absent);
}

TEST_CASE("threshold_search records honest gaps for ell = 0 mod 3") {
    auto r = threshold_search(6, 9);
    CHECK(!r.exhaustive);
    CHECK(r.lower <= r.upper);
    CHECK(r.lower == blowup_cycle(4, 9).degree_summary().min_semi + 1);
    CHECK(r.upper == 9 / 3 + 1);
}

TEST_CASE("digraph-mode threshold for 3-cycles on 4 vertices") {
    ThresholdConfig cfg;
    cfg.mode = Mode::general_digraph;
    auto r = threshold_search(3, 4, cfg);
    CHECK(r.exhaustive);
    CHECK(r.lower == 3); // complete bipartite digraph on 2+2: triangle-free at semidegree 2
    CHECK(r.witness_min_semidegree == 2);
    CHECK(r.lower_witness->mode() == Mode::general_digraph);
    CHECK(has_cycle_exact(*r.lower_witness, 3).status == SearchStatus::absent);
}

TEST_CASE("ex_di formula and brute force") {
    CHECK(ex_di_formula(3, 4) == doctest::Approx(8.0));
    CHECK(ex_di_formula(4, 6) == doctest::Approx(21.0));
    CHECK(ex_di_brute(3, 4) == 8);
    CHECK(ex_di_brute(3, 3) == 4);
    CHECK_THROWS_AS(ex_di_brute(3, 5), Error);
}

TEST_CASE("random_split_experiment") {
    auto g = blowup_cycle(3, 60);
    SplitExperimentConfig cfg;
    cfg.trials = 400;
    cfg.lemma_faithful = false;
    cfg.threshold_fraction = 1.0 / 6.0; // wide margin: n = 60 fluctuates a lot
    auto rep = random_split_experiment(g, cfg, 42);
    CHECK(rep.trials == 400);
    CHECK(rep.failure_frequency < 0.05);
    CHECK(rep.min_observed >= 0);
    CHECK(rep.threshold == doctest::Approx(30.0 / 6.0));

    cfg.trials = 0;
    auto empty = random_split_experiment(g, cfg, 1);
    CHECK(empty.trials == 0);
    CHECK(empty.failures == 0);
    CHECK(empty.failure_frequency == 0.0);

    try {
        random_split_experiment(blowup_cycle(3, 9), cfg, 1);
        FAIL("expected odd order");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::odd_order);
    }

    // the lemma-faithful variant refuses hosts below its precondition
    SplitExperimentConfig faithful;
    faithful.trials = 1;
    faithful.alpha = 0.2; // demands semidegree above n/3, the blow-up misses it
    CHECK_THROWS_AS(random_split_experiment(blowup_cycle(3, 60), faithful, 1), Error);
    auto dense = rotational_tournament(41);
    VertexSet drop(41);
    drop.set(40);
    auto host = induced_without(dense, drop).graph; // 40 vertices, semidegree >= 19
    faithful.alpha = 0.05;
    auto frep = random_split_experiment(host, faithful, 3);
    CHECK(frep.trials == 1);
}

TEST_CASE("split experiment is reproducible per seed") {
    auto g = blowup_cycle(3, 30);
    SplitExperimentConfig cfg;
    cfg.trials = 200;
    cfg.lemma_faithful = false;
    cfg.threshold_fraction = 0.3;
    auto a = random_split_experiment(g, cfg, 9);
    auto b = random_split_experiment(g, cfg, 9);
    CHECK(a.failures == b.failures);
    CHECK(a.min_observed == b.min_observed);
}

} // TEST_SUITE
