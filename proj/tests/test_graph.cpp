#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "cfc/conflict_graph.hpp"
#include "cfc/errors.hpp"
#include "cfc/graph.hpp"
#include "cfc/io.hpp"
#include "fixtures.hpp"

using namespace cfc;

namespace {

SimpleGraph cycle(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

SimpleGraph complete(std::size_t n) {
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

SimpleGraph random_graph(std::size_t n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    SimpleGraph g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

std::size_t brute_alpha(const SimpleGraph& g) {
    std::size_t best = 0;
    const auto n = g.order();
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(i);
        if (g.is_independent(s)) best = std::max(best, s.size());
    }
    return best;
}

int brute_chi(const SimpleGraph& g) {
    const auto n = g.order();
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        // Odometer over k^n assignments.
        for (;;) {
            if (is_proper_colouring(g, c)) return k;
            std::size_t i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

}  // namespace

TEST_CASE("simple graph basics") {
    auto g = cycle(5);
    CHECK(g.edge_count() == 5);
    CHECK(g.adjacent(0, 4));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.complement().edge_count() == 5);
    CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
    const std::vector<std::size_t> nodes{0, 1, 2};
    CHECK(g.induced(nodes).edge_count() == 2);
}

TEST_CASE("max_independent_set examples") {
    CHECK(max_independent_set(complete(3)).size == 1);
    CHECK(max_independent_set(cycle(5)).size == 2);
    const ConflictGraph g1(test::worked_example().to_hypergraph(), 1);
    // Pinned by an exhaustive scan of all 2^19 node subsets.
    CHECK(max_independent_set(g1.graph()).size == 4);
    CHECK(brute_alpha(g1.graph()) == 4);
}

TEST_CASE("max_independent_set matches subset scan") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = random_graph(4 + seed % 11, 0.15 + 0.1 * static_cast<double>(seed % 7), seed);
        const auto got = max_independent_set(g);
        REQUIRE(got.size == brute_alpha(g));
        CHECK(got.witness.size() == got.size);
        CHECK(g.is_independent(got.witness));
    }
}

TEST_CASE("max_weight_clique examples") {
    const std::vector<Rational> ones{1, 1, 1};
    CHECK(max_weight_clique(complete(3), ones).weight == 3);
    const std::vector<Rational> abc{Rational(1, 3), Rational(5, 2), Rational(2)};
    CHECK(max_weight_clique(SimpleGraph(3), abc).weight == Rational(5, 2));
    const std::vector<Rational> halves(5, Rational(1, 2));
    const auto c5 = max_weight_clique(cycle(5), halves);
    CHECK(c5.weight == 1);
    CHECK(c5.witness.size() == 2);
    const std::vector<Rational> negative{1, -1, 1};
    CHECK_THROWS_AS(max_weight_clique(complete(3), negative), InputError);
}

TEST_CASE("max_weight_clique with unit weights is the clique number") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_graph(5 + seed % 15, 0.5, seed);
        const std::vector<Rational> ones(g.order(), Rational(1));
        CHECK(max_weight_clique(g, ones).weight == static_cast<long>(max_clique(g).size()));
    }
}

TEST_CASE("max_weight_clique matches enumeration of maximal cliques") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_graph(6 + seed % 10, 0.45, seed);
        std::vector<Rational> w(g.order());
        for (auto& x : w) {
            x = Rational(static_cast<long>(rng() % 7), static_cast<long>(1 + rng() % 4));
            x.canonicalize();
        }
        Rational best = 0;
        for (const auto& c : enumerate_maximal_cliques(g)) {
            Rational s = 0;
            for (auto v : c) s += w[v];
            best = std::max(best, s);
        }
        const auto got = max_weight_clique(g, w);
        REQUIRE(got.weight == best);
        CHECK(g.is_clique(got.witness));
    }
}

TEST_CASE("chromatic_number_exact examples") {
    CHECK(chromatic_number_exact(complete(4)).chi == 4);
    CHECK(chromatic_number_exact(cycle(5)).chi == 3);
    SimpleGraph tree(4);
    tree.add_edge(0, 1);
    tree.add_edge(1, 3);
    tree.add_edge(2, 3);
    CHECK(chromatic_number_exact(tree).chi == 2);
    CHECK(chromatic_number_exact(SimpleGraph(0)).chi == 0);
}

TEST_CASE("chromatic_number_exact matches odometer search") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto g = random_graph(3 + seed % 7, 0.5, seed);
        const auto got = chromatic_number_exact(g);
        REQUIRE(got.chi == brute_chi(g));
        CHECK(is_proper_colouring(g, got.colour));
        CHECK(*std::max_element(got.colour.begin(), got.colour.end()) == got.chi);
    }
}

TEST_CASE("enumerate_maximal_cliques examples") {
    CHECK(enumerate_maximal_cliques(complete(3)) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    SimpleGraph path(3);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    CHECK(enumerate_maximal_cliques(path) == std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}});
    // G_1 of [1,3],[2,2]: nodes ([1,3],1) ([1,3],2) ([1,3],3) ([2,2],2); pinned by subset scan.
    const ConflictGraph g1(IntervalHypergraph(3, {{1, 3}, {2, 2}}).to_hypergraph(), 1);
    CHECK(enumerate_maximal_cliques(g1.graph()) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 2, 3}});
}

TEST_CASE("maximal cliques are maximal, distinct and complete") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto g = random_graph(4 + seed % 9, 0.5, seed);
        const auto cliques = enumerate_maximal_cliques(g);
        std::vector<std::vector<std::size_t>> brute;
        const auto n = g.order();
        for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.push_back(i);
            if (!g.is_clique(s)) continue;
            bool maximal = true;
            for (std::size_t v = 0; v < n && maximal; ++v) {
                if (mask >> v & 1) continue;
                auto t = s;
                t.push_back(v);
                std::sort(t.begin(), t.end());
                if (g.is_clique(t)) maximal = false;
            }
            if (maximal) brute.push_back(s);
        }
        std::sort(brute.begin(), brute.end());
        REQUIRE(cliques == brute);
    }
}

TEST_CASE("is_berge examples") {
    const auto c5 = is_berge(cycle(5), 5);
    CHECK_FALSE(c5.is_berge);
    CHECK(c5.certificate.size() == 5);
    CHECK(is_berge(cycle(6), 7).is_berge);
    SimpleGraph bip(6);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 3; b < 6; ++b) bip.add_edge(a, b);
    CHECK(is_berge(bip, 5).is_berge);
    const auto anti = is_berge(cycle(7).complement(), 7);
    CHECK_FALSE(anti.is_berge);
    CHECK(anti.antihole);
    // Length cap below the hole length.
    CHECK(is_berge(cycle(7), 5).is_berge);
}

TEST_CASE("is_berge certificates are induced odd holes") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto g = random_graph(5 + seed % 6, 0.4, seed);
        const auto r = is_berge(g, static_cast<int>(g.order()));
        if (r.is_berge) continue;
        const auto& h = r.antihole ? g.complement() : g;
        const auto& c = r.certificate;
        REQUIRE(c.size() % 2 == 1);
        REQUIRE(c.size() >= 5);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                const bool consecutive = j == i + 1 || (i == 0 && j == c.size() - 1);
                CHECK(h.adjacent(c[i], c[j]) == consecutive);
            }
    }
}

TEST_CASE("Berge graphs satisfy chi = omega on induced subgraphs") {
    std::mt19937_64 rng(11);
    int berge = 0;
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        const auto g = random_graph(5 + seed % 8, 0.3 + 0.05 * static_cast<double>(seed % 5), seed);
        if (!is_berge(g, static_cast<int>(g.order())).is_berge) continue;
        ++berge;
        CHECK(chromatic_number_exact(g).chi == static_cast<int>(max_clique(g).size()));
        for (int s = 0; s < 50; ++s) {
            std::vector<std::size_t> nodes;
            for (std::size_t v = 0; v < g.order(); ++v)
                if (rng() & 1) nodes.push_back(v);
            const auto sub = g.induced(nodes);
            CHECK(chromatic_number_exact(sub).chi == static_cast<int>(max_clique(sub).size()));
        }
    }
    CHECK(berge > 10);
}

TEST_CASE("budgets raise resource errors") {
    GraphBudget tiny;
    tiny.max_exact_order = 3;
    CHECK_THROWS_AS(chromatic_number_exact(cycle(5), tiny), ResourceError);
    tiny.max_search_order = 3;
    CHECK_THROWS_AS(max_independent_set(cycle(5), tiny), ResourceError);
}

TEST_CASE("DIMACS round trip and errors") {
    const auto g = cycle(5);
    std::ostringstream os;
    io::write_dimacs(os, g, {"five cycle"});
    std::istringstream in(os.str());
    CHECK(io::read_dimacs(in, "mem") == g);
    std::istringstream bad("p edge 3 1\ne 1 4\n");
    CHECK_THROWS_WITH_AS(io::read_dimacs(bad, "bad.col"), doctest::Contains("bad.col:2"), InputError);
    std::istringstream count("p edge 3 2\ne 1 2\n");
    CHECK_THROWS_AS(io::read_dimacs(count, "count.col"), InputError);
}
