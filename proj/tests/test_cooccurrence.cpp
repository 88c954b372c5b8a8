#include <doctest.h>

#include "cfc/cooccurrence.hpp"
#include "cfc/errors.hpp"
#include "cfc/oracles.hpp"
#include "fixtures.hpp"

using namespace cfc;

namespace {
using Pairs = std::vector<std::pair<Vertex, Vertex>>;
}

TEST_CASE("representative function validation") {
    const auto h = test::worked_example().to_hypergraph();
    CHECK_THROWS_AS(RepresentativeFunction(h, {5, 9, 3, 5, 7}), InputError);
    CHECK_THROWS_AS(RepresentativeFunction(h, {6, 9, 3, 5, 7, 9}), InputError);
    CHECK(RepresentativeFunction(h, {5, 9, 3, 5, 7, 9}).image() == std::vector<Vertex>{3, 5, 7, 9});
}

TEST_CASE("worked example co-occurrence graph") {
    const auto h = test::worked_example().to_hypergraph();
    const RepresentativeFunction t(h, {5, 9, 3, 5, 7, 9});
    const CoOccurrenceGraph gamma(h, t);
    CHECK(gamma.vertices() == std::vector<Vertex>{3, 5, 7, 9});
    CHECK(gamma.vertex_edges() == Pairs{{3, 5}, {5, 9}, {7, 9}});
    CHECK(gamma.represented()[1] == std::vector<std::size_t>{0, 3});
}

TEST_CASE("co-occurrence trivial examples") {
    const auto disjoint = IntervalHypergraph(9, {{1, 2}, {4, 5}, {7, 9}}).to_hypergraph();
    const CoOccurrenceGraph g(disjoint, RepresentativeFunction(disjoint, {2, 4, 9}));
    CHECK(g.vertices().size() == 3);
    CHECK(g.graph().edge_count() == 0);
    const Hypergraph one(3, {{1, 2, 3}});
    const CoOccurrenceGraph g1(one, RepresentativeFunction(one, {2}));
    CHECK(g1.vertices() == std::vector<Vertex>{2});
    CHECK(g1.graph().edge_count() == 0);
}

TEST_CASE("co-occurrence adjacency matches the definition") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto h = random_hypergraph(7, 5, seed);
        const auto count = representative_function_count(h);
        const auto t = representative_function_at(h, seed % count);
        const CoOccurrenceGraph gamma(h, t);
        const auto& vs = gamma.vertices();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) {
                bool expect = false;
                for (std::size_t e = 0; e < h.num_edges(); ++e)
                    if (h.contains(e, vs[a]) && h.contains(e, vs[b]) && (t[e] == vs[a] || t[e] == vs[b])) expect = true;
                REQUIRE(gamma.graph().adjacent(a, b) == expect);
            }
    }
}

TEST_CASE("extend_colouring examples") {
    const auto h = test::worked_example().to_hypergraph();
    const RepresentativeFunction t(h, {5, 9, 3, 5, 7, 9});
    // gamma.vertices() = {3,5,7,9}; pc = {5:1, 3:2, 9:2, 7:1}
    const std::vector<int> pc{2, 1, 1, 2};
    const auto c = extend_colouring(h, t, pc);
    CHECK(c == test::worked_example_colouring());
    CHECK(verify_cf(h, c).is_cf);

    const Hypergraph one(3, {{1, 2, 3}});
    CHECK(extend_colouring(one, RepresentativeFunction(one, {2}), std::vector<int>{1}) == Colouring({0, 1, 0}));

    const auto disjoint = IntervalHypergraph(9, {{1, 2}, {4, 5}, {7, 9}}).to_hypergraph();
    const auto cd = extend_colouring(disjoint, RepresentativeFunction(disjoint, {2, 4, 9}), std::vector<int>{1, 1, 1});
    CHECK(cd.colours_used() == 1);
    CHECK(cd[2] == 1);
    CHECK(cd[4] == 1);
    CHECK(cd[9] == 1);

    const std::vector<int> improper{1, 1, 2, 2};
    CHECK_THROWS_WITH_AS(extend_colouring(h, t, improper), doctest::Contains("(3,5)"), ContractError);
    const std::vector<int> sparse{7, 3, 3, 7};
    CHECK(extend_colouring(h, t, sparse) == test::worked_example_colouring());
}

TEST_CASE("extend_colouring of a proper colouring is always conflict-free") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto h = random_hypergraph(7, 6, seed);
        const auto t = representative_function_at(h, seed * 7919 % representative_function_count(h));
        const CoOccurrenceGraph gamma(h, t);
        const auto pc = chromatic_number_exact(gamma.graph());
        const auto c = extend_colouring(h, t, pc.colour);
        CHECK(verify_cf(h, c).is_cf);
        CHECK(c.colours_used() == pc.chi);
    }
}

TEST_CASE("chi_min_bruteforce examples") {
    CHECK(chi_min_bruteforce(Hypergraph(2, {{1, 2}})).chi_min == 1);
    const auto h2 = chi_min_bruteforce(test::h2());
    CHECK(h2.chi_min == 2);
    CHECK(h2.t_best.values() == std::vector<Vertex>{1, 2, 1});
    CHECK(chi_min_bruteforce(test::worked_example().to_hypergraph()).chi_min == 2);
}

TEST_CASE("representative function enumeration order") {
    const auto h = test::h2();
    CHECK(representative_function_count(h) == 2);
    CHECK(representative_function_at(h, 0).values() == std::vector<Vertex>{1, 2, 1});
    CHECK(representative_function_at(h, 1).values() == std::vector<Vertex>{1, 2, 2});
}

TEST_CASE("find_representative_function agrees with chi_cf") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const auto h = seed % 2 ? random_hypergraph(7, 6, seed) : random_interval_hypergraph(12, 8, seed).to_hypergraph();
        const int chi = chi_cf_bruteforce(h);
        const auto hit = find_representative_function(h, chi);
        REQUIRE(hit.t.has_value());
        CHECK(chromatic_number_exact(CoOccurrenceGraph(h, *hit.t).graph()).chi <= chi);
        if (chi > 1) CHECK_FALSE(find_representative_function(h, chi - 1).t.has_value());
    }
    CHECK_THROWS_AS(find_representative_function(test::h2(), 0), InputError);
}

TEST_CASE("interval co-occurrence graphs are Berge with chi = omega") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto ih = random_interval_hypergraph(12, 8, seed);
        const auto h = ih.to_hypergraph();
        const auto count = representative_function_count(h);
        for (std::uint64_t i = 0; i < 5; ++i) {
            const CoOccurrenceGraph gamma(h, representative_function_at(h, (seed * 104729 + i * 7727) % count));
            const auto& g = gamma.graph();
            CHECK(is_berge(g, static_cast<int>(g.order())).is_berge);
            CHECK(chromatic_number_exact(g).chi == static_cast<int>(max_clique(g).size()));
        }
    }
}
