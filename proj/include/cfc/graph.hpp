#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cfc/rational.hpp"

namespace cfc {

using NodeSet = boost::dynamic_bitset<>;

/// Undirected simple graph on nodes 0..order-1 stored as adjacency bit rows.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(std::size_t order);

    std::size_t order() const { return rows_.size(); }
    std::size_t edge_count() const;

    void add_edge(std::size_t u, std::size_t v);
    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const NodeSet& neighbours(std::size_t u) const { return rows_[u]; }
    std::size_t degree(std::size_t u) const { return rows_[u].count(); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    SimpleGraph complement() const;
    /// Subgraph induced by `nodes`; node i of the result is nodes[i].
    SimpleGraph induced(std::span<const std::size_t> nodes) const;

    bool is_clique(std::span<const std::size_t> nodes) const;
    bool is_independent(std::span<const std::size_t> nodes) const;

    NodeSet all_nodes() const { return NodeSet(order()).set(); }

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    std::vector<NodeSet> rows_;
};

/// Hard caps for the exact searches. Exceeding one raises ResourceError.
struct GraphBudget {
    std::size_t max_search_order = 2000;  ///< independent set, clique, clique enumeration
    std::size_t max_exact_order = 60;     ///< chromatic number and Berge check
    std::uint64_t max_branch_nodes = 50'000'000;
    std::size_t max_cliques = 1'000'000;
};

struct IndependentSet {
    std::size_t size = 0;
    std::vector<std::size_t> witness;
};

struct WeightedClique {
    Rational weight = 0;
    std::vector<std::size_t> witness;
};

struct GraphColouring {
    int chi = 0;
    /// colour[v] in 1..chi
    std::vector<int> colour;
};

struct BergeReport {
    bool is_berge = true;
    /// Node sequence of the odd hole found, in cycle order.
    std::vector<std::size_t> certificate;
    /// True when the hole was found in the complement (an odd antihole of g).
    bool antihole = false;
};

std::vector<std::size_t> max_clique(const SimpleGraph& g, const GraphBudget& budget = {});

/// Exact maximum independent set by branch-and-bound with a greedy clique-cover bound.
IndependentSet max_independent_set(const SimpleGraph& g, const GraphBudget& budget = {});

/// Exact maximum-weight clique; weights must be non-negative. Zero-weight nodes may be
/// left out of the witness.
WeightedClique max_weight_clique(const SimpleGraph& g, std::span<const Rational> weights,
                                 const GraphBudget& budget = {});

/// Exact chromatic number by DSATUR branch-and-bound seeded with a maximum clique.
GraphColouring chromatic_number_exact(const SimpleGraph& g, const GraphBudget& budget = {});

/// All maximal cliques (pivoting Bron-Kerbosch), each sorted, list sorted lexicographically.
std::vector<std::vector<std::size_t>> enumerate_maximal_cliques(const SimpleGraph& g,
                                                                const GraphBudget& budget = {});

/// Searches for an induced odd cycle of length 5..max_len in g and in its complement.
BergeReport is_berge(const SimpleGraph& g, int max_len, const GraphBudget& budget = {});

/// Greedily adds the lowest-index node adjacent to every member until the clique is maximal.
std::vector<std::size_t> extend_to_maximal(const SimpleGraph& g, std::vector<std::size_t> clique);

bool is_proper_colouring(const SimpleGraph& g, std::span<const int> colour);

}  // namespace cfc
