#include <doctest.h>

#include <variant>

#include "cfc/errors.hpp"
#include "cfc/interval_solver.hpp"
#include "cfc/oracles.hpp"
#include "fixtures.hpp"

using namespace cfc;

TEST_CASE("exact_hittable_intervals examples") {
    const IntervalHypergraph disjoint(9, {{1, 2}, {4, 5}, {7, 9}});
    const auto s = exact_hittable_intervals(disjoint);
    REQUIRE(s.has_value());
    CHECK(s->size() == 3);
    CHECK(is_exact_hitting_set(disjoint.to_hypergraph(), *s));
    CHECK_FALSE(exact_hittable_intervals(IntervalHypergraph(2, {{1, 1}, {2, 2}, {1, 2}})).has_value());
    CHECK_FALSE(exact_hittable_intervals(test::worked_example()).has_value());
}

TEST_CASE("exact_hittable_intervals agrees with subset search") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto ih = random_interval_hypergraph(12, 8, seed);
        const auto h = ih.to_hypergraph();
        const auto dp = exact_hittable_intervals(ih);
        const auto bf = exact_hitting_set_bruteforce(h);
        REQUIRE(dp.has_value() == bf.has_value());
        if (dp) CHECK(is_exact_hitting_set(h, *dp));
    }
}

TEST_CASE("solve examples") {
    const auto one = solve(IntervalHypergraph(4, {{2, 4}}));
    CHECK(one.chi_cf == 1);
    CHECK(one.branch == Branch::exactly_hittable);

    const auto fig = solve(test::worked_example());
    CHECK(fig.chi_cf == 2);
    CHECK(fig.branch == Branch::lp_pipeline);
    CHECK(verify_cf(test::worked_example().to_hypergraph(), fig.colouring).is_cf);
    const auto& cert = std::get<LpCertificate>(fig.certificate);
    CHECK(cert.q_min == 2);
    CHECK(cert.gamma_clique_number <= 2);

    const auto h4 = solve(IntervalHypergraph::discrete(4));
    CHECK(h4.chi_cf == 3);
    CHECK(h4.colouring.colours_used() == 3);
    CHECK(verify_cf(IntervalHypergraph::discrete(4).to_hypergraph(), h4.colouring).is_cf);

    const auto two = solve(IntervalHypergraph(2, {{1, 1}, {2, 2}, {1, 2}}));
    CHECK(two.chi_cf == 2);
    CHECK(two.branch == Branch::clique_cover_2);
    CHECK(two.colouring == Colouring({1, 2}));

    CHECK_THROWS_AS(solve(IntervalHypergraph(3, {})), InputError);
}

TEST_CASE("solve matches the frozen corpus") {
    const auto corpus = test::load_corpus();
    REQUIRE(corpus.size() == 100);
    for (const auto& e : corpus) {
        CAPTURE(e.seed);
        const auto r = solve(e.ih);
        CHECK(r.chi_cf == e.chi_cf);
        CHECK(r.colouring.colours_used() == r.chi_cf);
        CHECK(verify_cf(e.ih.to_hypergraph(), r.colouring).is_cf);
    }
}

TEST_CASE("branch (c) certificates are consistent") {
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        const auto ih = random_interval_hypergraph(12, 8, seed);
        const auto r = solve(ih);
        if (r.branch == Branch::clique_cover_2) {
            CHECK(r.chi_cf == 2);
            CHECK(max_disjoint_intervals(ih).count < 3);
        }
        if (r.branch != Branch::lp_pipeline) continue;
        CHECK(max_disjoint_intervals(ih).count >= 3);
        const auto& c = std::get<LpCertificate>(r.certificate);
        CHECK(c.q_min <= r.chi_cf);
        CHECK(c.gamma_clique_number <= r.chi_cf);
        const auto h = ih.to_hypergraph();
        const CoOccurrenceGraph gamma(h, c.t);
        CHECK(gamma.vertices() == c.gamma_vertices);
        CHECK(gamma.vertex_edges() == c.gamma_edges);
        CHECK(chromatic_number_exact(gamma.graph()).chi == static_cast<int>(max_clique(gamma.graph()).size()));
        if (c.rounding == RoundingOutcome::integral_feasible) CHECK(r.chi_cf == c.q_min);
    }
}

TEST_CASE("partition_from_colouring examples") {
    const Hypergraph one(2, {{1, 2}});
    const auto p = partition_from_colouring(one, Colouring({1, 0}));
    REQUIRE(p.size() == 1);
    CHECK(p[0].hitting_set == std::vector<Vertex>{1});

    const auto fig = test::worked_example().to_hypergraph();
    const auto parts = partition_from_colouring(fig, test::worked_example_colouring());
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].edges == std::vector<std::size_t>{3, 4});
    CHECK(parts[0].hitting_set == std::vector<Vertex>{5, 7});
    CHECK(parts[1].edges == std::vector<std::size_t>{0, 1, 2, 5});
    CHECK(parts[1].hitting_set == std::vector<Vertex>{3, 9});

    const auto sparse = partition_from_colouring(Hypergraph(3, {{1, 2}}), Colouring({1, 2, 3}));
    CHECK(sparse.size() == 1);
    CHECK_THROWS_AS(partition_from_colouring(one, Colouring({1, 1})), ContractError);
}

TEST_CASE("colouring_from_partition examples") {
    const IntervalHypergraph disjoint(9, {{1, 2}, {4, 5}, {7, 9}});
    const auto c1 = colouring_from_partition(disjoint, {{{0, 1, 2}, {2, 4, 9}}});
    CHECK(c1.colours_used() == 1);
    CHECK(verify_cf(disjoint.to_hypergraph(), c1).is_cf);

    const auto fig = test::worked_example();
    const std::vector<EhsPart> parts{{{3, 4}, {5, 7}}, {{0, 1, 2, 5}, {3, 9}}};
    const auto c2 = colouring_from_partition(fig, parts);
    CHECK(c2.colours_used() <= 2);
    CHECK(verify_cf(fig.to_hypergraph(), c2).is_cf);

    std::vector<EhsPart> singletons;
    for (std::size_t i = 0; i < fig.size(); ++i) singletons.push_back({{i}, {fig.interval(i).l}});
    const auto c3 = colouring_from_partition(fig, singletons);
    CHECK(c3.colours_used() <= static_cast<int>(fig.size()));
    CHECK(verify_cf(fig.to_hypergraph(), c3).is_cf);

    CHECK_THROWS_AS(colouring_from_partition(fig, {{{0, 1, 2, 3, 4}, {5}}}), InputError);
    CHECK_THROWS_AS(colouring_from_partition(fig, {{{0, 2}, {3, 5}}, {{1, 3, 4, 5}, {6, 9}}}), InputError);
    CHECK_THROWS_AS(colouring_from_partition(fig, {{{0, 0, 1, 2, 3, 4, 5}, {1}}}), InputError);
}

TEST_CASE("partition round trip preserves the colour bound") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto ih = random_interval_hypergraph(12, 8, seed);
        const auto h = ih.to_hypergraph();
        const auto r = solve(ih);
        const auto parts = partition_from_colouring(h, r.colouring);
        CHECK(parts.size() == static_cast<std::size_t>(r.chi_cf));
        for (const auto& p : parts) {
            std::vector<std::vector<Vertex>> sub;
            for (auto e : p.edges) sub.push_back(h.edge(e));
            CHECK(is_exact_hitting_set(Hypergraph(h.num_vertices(), sub), p.hitting_set));
        }
        const auto back = colouring_from_partition(ih, parts);
        CHECK(verify_cf(h, back).is_cf);
        CHECK(back.colours_used() <= r.chi_cf);
    }
}
