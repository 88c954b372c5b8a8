#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cfc/cooccurrence.hpp"
#include "cfc/hypergraph.hpp"

namespace cfc {

/// Caps for the brute-force searches. Exceeding one raises ResourceError.
struct OracleBudget {
    int max_vertices = 24;
    std::size_t max_edges = 24;
    int max_colour_budget = 16;
    std::uint64_t max_states = 500'000'000;
};

// Brute-force ground truth. Each search has an OpenMP kernel and a serial reference;
// both return identical results (the parallel reduction keeps the serial tie-break).

/// First canonical colouring V -> {0..k} (non-zero colours introduced in increasing order,
/// vertices assigned 1..n, colour 0 tried first) that is conflict-free, if any.
std::optional<Colouring> find_cf_colouring(const Hypergraph& h, int k, const OracleBudget& budget = {});
std::optional<Colouring> find_cf_colouring_serial(const Hypergraph& h, int k, const OracleBudget& budget = {});

/// Smallest k such that some colouring V -> {0..k} is conflict-free.
int chi_cf_bruteforce(const Hypergraph& h, const OracleBudget& budget = {});
int chi_cf_bruteforce_serial(const Hypergraph& h, const OracleBudget& budget = {});

/// Minimises chi(Gamma_t) over every representative function; ties go to the
/// lexicographically first t.
ChiMinResult chi_min_bruteforce(const Hypergraph& h, const OracleBudget& budget = {});
ChiMinResult chi_min_bruteforce_serial(const Hypergraph& h, const OracleBudget& budget = {});

struct EhsPartition {
    int parts = 0;
    std::vector<std::vector<std::size_t>> edge_sets;
    std::vector<std::vector<Vertex>> hitting_sets;
};

/// Minimum number of parts in a partition of the hyperedges into exactly hittable
/// families, found by exhaustive search over vertex subsets and edge partitions.
EhsPartition min_ehs_partition_bruteforce(const Hypergraph& h, const OracleBudget& budget = {});
inline EhsPartition min_ehs_partition_bruteforce(const IntervalHypergraph& ih, const OracleBudget& budget = {}) {
    return min_ehs_partition_bruteforce(ih.to_hypergraph(), budget);
}

/// Exact hitting set by subset enumeration, smallest in (size, lexicographic) order.
std::optional<std::vector<Vertex>> exact_hitting_set_bruteforce(const Hypergraph& h, const OracleBudget& budget = {});

/// Deterministic instance: n uniform in 1..n_max, m uniform in 1..m_max, and for each
/// interval two uniform points in 1..n taken as (min, max).
IntervalHypergraph random_interval_hypergraph(int n_max, int m_max, std::uint64_t seed);

/// Deterministic general hypergraph with m hyperedges drawn as uniform non-empty subsets.
Hypergraph random_hypergraph(int n_max, int m_max, std::uint64_t seed);

}  // namespace cfc
