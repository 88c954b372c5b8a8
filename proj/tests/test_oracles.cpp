#include <doctest.h>

#include "cfc/conflict_graph.hpp"
#include "cfc/errors.hpp"
#include "cfc/oracles.hpp"
#include "fixtures.hpp"

using namespace cfc;

TEST_CASE("chi_cf_bruteforce examples") {
    CHECK(chi_cf_bruteforce(Hypergraph(2, {{1, 2}})) == 1);
    CHECK(chi_cf_bruteforce(test::h2()) == 2);
    CHECK(chi_cf_bruteforce(test::worked_example().to_hypergraph()) == 2);
    CHECK(chi_cf_bruteforce(Hypergraph(3, {})) == 0);
}

TEST_CASE("discrete interval hypergraphs") {
    OracleBudget big;
    big.max_edges = 64;
    const std::vector<int> expected{1, 2, 2, 3, 3, 3, 3, 4};
    for (int n = 1; n <= 8; ++n) CHECK(chi_cf_bruteforce(IntervalHypergraph::discrete(n).to_hypergraph(), big) == expected[n - 1]);
    CHECK_THROWS_AS(chi_cf_bruteforce(IntervalHypergraph::discrete(8).to_hypergraph()), ResourceError);
}

TEST_CASE("find_cf_colouring returns the first canonical colouring") {
    CHECK(*find_cf_colouring(Hypergraph(2, {{1, 2}}), 1) == Colouring({0, 1}));
    CHECK(*find_cf_colouring(test::h2(), 2) == Colouring({1, 2}));
    CHECK_FALSE(find_cf_colouring(test::h2(), 1).has_value());
}

TEST_CASE("serial and parallel kernels agree") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto h = seed % 2 ? random_hypergraph(7, 6, seed) : random_interval_hypergraph(12, 8, seed).to_hypergraph();
        const int k = chi_cf_bruteforce_serial(h);
        CHECK(chi_cf_bruteforce(h) == k);
        CHECK(find_cf_colouring(h, k) == find_cf_colouring_serial(h, k));
        const auto a = chi_min_bruteforce(h);
        const auto b = chi_min_bruteforce_serial(h);
        CHECK(a.chi_min == b.chi_min);
        CHECK(a.t_best == b.t_best);
    }
}

TEST_CASE("min_ehs_partition_bruteforce examples") {
    CHECK(min_ehs_partition_bruteforce(IntervalHypergraph(9, {{1, 2}, {4, 5}, {7, 9}})).parts == 1);
    const auto h2 = min_ehs_partition_bruteforce(test::h2());
    CHECK(h2.parts == 2);
    const auto fig = min_ehs_partition_bruteforce(test::worked_example());
    CHECK(fig.parts == 2);
    const auto h = test::worked_example().to_hypergraph();
    for (std::size_t i = 0; i < fig.edge_sets.size(); ++i) {
        std::vector<std::vector<Vertex>> sub;
        for (auto e : fig.edge_sets[i]) sub.push_back(h.edge(e));
        CHECK(is_exact_hitting_set(Hypergraph(h.num_vertices(), sub), fig.hitting_sets[i]));
    }
}

TEST_CASE("exact_hitting_set_bruteforce examples") {
    CHECK(*exact_hitting_set_bruteforce(Hypergraph(2, {{1, 2}})) == std::vector<Vertex>{1});
    CHECK_FALSE(exact_hitting_set_bruteforce(test::h2()).has_value());
    CHECK_FALSE(exact_hitting_set_bruteforce(test::worked_example().to_hypergraph()).has_value());
}

TEST_CASE("random generators") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto ih = random_interval_hypergraph(1, 1, seed);
        CHECK(ih.num_points() == 1);
        CHECK(ih.intervals() == std::vector<Interval>{{1, 1}});
    }
    CHECK(random_interval_hypergraph(12, 8, 42).intervals() == random_interval_hypergraph(12, 8, 42).intervals());
    CHECK(random_hypergraph(6, 5, 7).edges() == random_hypergraph(6, 5, 7).edges());
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto ih = random_interval_hypergraph(12, 8, seed);
        CHECK(ih.num_points() >= 1);
        CHECK(ih.num_points() <= 12);
        CHECK(ih.size() >= 1);
        CHECK(ih.size() <= 8);
        const auto h = random_hypergraph(6, 5, seed);
        CHECK(h.num_vertices() <= 6);
        CHECK(h.num_edges() <= 5);
    }
}

TEST_CASE("corpus fixture is reproducible") {
    const auto corpus = test::load_corpus();
    REQUIRE(corpus.size() == 100);
    for (const auto& e : corpus) {
        const auto ih = random_interval_hypergraph(12, 8, e.seed);
        CHECK(ih.num_points() == e.ih.num_points());
        CHECK(ih.intervals() == e.ih.intervals());
        CHECK(chi_cf_bruteforce_serial(ih.to_hypergraph()) == e.chi_cf);
    }
}

TEST_CASE("independent paths agree on the corpus") {
    for (const auto& e : test::load_corpus()) {
        const auto h = e.ih.to_hypergraph();
        CHECK(chi_min_bruteforce(h).chi_min == e.chi_cf);
        CHECK(min_ehs_partition_bruteforce(h).parts == e.chi_cf);
        if (h.incidence_size() <= 40) CHECK(cf_number_via_mis(h, e.chi_cf).k_min == e.chi_cf);
    }
}

TEST_CASE("chi_cf is monotone under edge deletion") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto h = random_hypergraph(6, 5, seed);
        const int k = chi_cf_bruteforce(h);
        for (std::size_t drop = 0; drop < h.num_edges(); ++drop) {
            auto edges = h.edges();
            edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK(chi_cf_bruteforce(Hypergraph(h.num_vertices(), edges)) <= k);
        }
    }
}

TEST_CASE("oracle budgets") {
    OracleBudget tiny;
    tiny.max_vertices = 2;
    CHECK_THROWS_AS(chi_cf_bruteforce(test::worked_example().to_hypergraph(), tiny), ResourceError);
    OracleBudget states;
    states.max_states = 1;
    CHECK_THROWS_AS(chi_min_bruteforce(IntervalHypergraph::discrete(4).to_hypergraph(), states), ResourceError);
}
