#include <benchmark/benchmark.h>

#include <vector>

#include "cfc/interval_solver.hpp"
#include "cfc/oracles.hpp"

using namespace cfc;

namespace {

OracleBudget wide() {
    OracleBudget b;
    b.max_edges = 64;
    return b;
}

Hypergraph discrete(int n) { return IntervalHypergraph::discrete(n).to_hypergraph(); }

std::vector<Hypergraph> corpus(int count) {
    std::vector<Hypergraph> out;
    for (int seed = 0; seed < count; ++seed) out.push_back(random_interval_hypergraph(12, 8, seed).to_hypergraph());
    return out;
}

template <int (*Chi)(const Hypergraph&, const OracleBudget&)>
void chi_cf_discrete(benchmark::State& state) {
    const auto h = discrete(static_cast<int>(state.range(0)));
    const auto budget = wide();
    for (auto _ : state) benchmark::DoNotOptimize(Chi(h, budget));
}

template <std::optional<Colouring> (*Find)(const Hypergraph&, int, const OracleBudget&)>
void find_colouring_discrete(benchmark::State& state) {
    const auto h = discrete(static_cast<int>(state.range(0)));
    const auto budget = wide();
    const int k = chi_cf_bruteforce(h, budget);
    for (auto _ : state) benchmark::DoNotOptimize(Find(h, k, budget));
}

template <ChiMinResult (*ChiMin)(const Hypergraph&, const OracleBudget&)>
void chi_min_discrete(benchmark::State& state) {
    const auto h = discrete(static_cast<int>(state.range(0)));
    const auto budget = wide();
    for (auto _ : state) benchmark::DoNotOptimize(ChiMin(h, budget));
}

template <int (*Chi)(const Hypergraph&, const OracleBudget&)>
void chi_cf_corpus(benchmark::State& state) {
    const auto hs = corpus(100);
    for (auto _ : state)
        for (const auto& h : hs) benchmark::DoNotOptimize(Chi(h, OracleBudget{}));
}

void solve_discrete(benchmark::State& state) {
    const auto ih = IntervalHypergraph::discrete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(solve(ih));
}

}  // namespace

BENCHMARK(chi_cf_discrete<chi_cf_bruteforce_serial>)->Name("chi_cf/serial/H_n")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(chi_cf_discrete<chi_cf_bruteforce>)->Name("chi_cf/openmp/H_n")->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(find_colouring_discrete<find_cf_colouring_serial>)->Name("find_cf_colouring/serial/H_n")->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(find_colouring_discrete<find_cf_colouring>)->Name("find_cf_colouring/openmp/H_n")->DenseRange(5, 8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(chi_min_discrete<chi_min_bruteforce_serial>)->Name("chi_min/serial/H_n")->DenseRange(3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(chi_min_discrete<chi_min_bruteforce>)->Name("chi_min/openmp/H_n")->DenseRange(3, 4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(chi_cf_corpus<chi_cf_bruteforce_serial>)->Name("chi_cf/serial/corpus100")->Unit(benchmark::kMillisecond);
BENCHMARK(chi_cf_corpus<chi_cf_bruteforce>)->Name("chi_cf/openmp/corpus100")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(solve_discrete)->Name("solve/H_n")->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
