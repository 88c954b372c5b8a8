#pragma once

#include <string>
#include <vector>

#include "cfc/hypergraph.hpp"
#include "cfc/io.hpp"

namespace cfc::test {

inline IntervalHypergraph worked_example() { return IntervalHypergraph(10, {{1, 5}, {5, 10}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}); }

/// Colouring {3:2, 5:1, 7:1, 9:2}, all other vertices 0.
inline Colouring worked_example_colouring() {
    auto c = Colouring::zeros(10);
    c.set(3, 2);
    c.set(5, 1);
    c.set(7, 1);
    c.set(9, 2);
    return c;
}

inline Hypergraph h2() { return Hypergraph(2, {{1}, {2}, {1, 2}}); }

struct CorpusEntry {
    IntervalHypergraph ih;
    std::uint64_t seed = 0;
    int chi_cf = 0;
};

inline std::vector<CorpusEntry> load_corpus() {
    const auto j = io::parse_json(io::read_text(CFC_TEST_DATA "/corpus.json"), "corpus.json");
    std::vector<CorpusEntry> out;
    for (const auto& e : j.at("instances")) {
        std::vector<Interval> ivs;
        for (const auto& iv : e.at("intervals")) ivs.push_back({iv.at(0).get<int>(), iv.at(1).get<int>()});
        out.push_back({IntervalHypergraph(e.at("n").get<int>(), std::move(ivs)), e.at("seed").get<std::uint64_t>(),
                       e.at("chi_cf").get<int>()});
    }
    return out;
}

}  // namespace cfc::test
