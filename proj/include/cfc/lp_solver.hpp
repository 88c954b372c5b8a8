#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "cfc/conflict_graph.hpp"
#include "cfc/graph.hpp"
#include "cfc/rational.hpp"

namespace cfc {

/// One exact rational value per node of G_1, in node order.
struct LPSolution {
    std::vector<Rational> values;

    bool is_integral() const;
};

/// Clique inequality sum_{(I,u) in nodes} x_{I,u} <= q over G_1 node indices.
struct CliqueCut {
    std::vector<std::size_t> nodes;
};

/// Feasibility system over the nodes of G_1:
///   sum_{u in I} x_{I,u} = 1   for every hyperedge I,
///   sum_{(I,u) in Q} x_{I,u} <= q   for every clique cut Q in the working set,
///   0 <= x <= 1.
class LPInstance {
public:
    LPInstance(const ConflictGraph& g1, int q);

    const ConflictGraph& conflict_graph() const { return g1_; }
    int bound() const { return q_; }
    std::size_t num_variables() const { return g1_.order(); }
    const std::vector<CliqueCut>& cuts() const { return cuts_; }

    /// Adds a cut; the node set must be a clique of G_1 spanning two hyperedges.
    void add_cut(CliqueCut cut);
    void clear_cuts() { cuts_.clear(); }

    bool satisfies_equalities(const LPSolution& x) const;
    bool satisfies_cuts(const LPSolution& x) const;

private:
    const ConflictGraph& g1_;
    int q_;
    std::vector<CliqueCut> cuts_;
};

struct SimplexBudget {
    std::uint64_t max_pivots = 2'000'000;
};

/// Phase-1 simplex with Bland's rule in exact arithmetic. Returns a basic feasible point
/// of the instance, or nullopt if the system is infeasible.
std::optional<LPSolution> find_feasible_point(const LPInstance& lp, const SimplexBudget& budget = {},
                                              std::uint64_t* pivots = nullptr);

/// Weights G_1 by x and searches for a maximum-weight clique; returns it extended to a
/// maximal clique when its weight exceeds q.
std::optional<CliqueCut> separation_max_weight_clique(const ConflictGraph& g1, const LPSolution& x, int q,
                                                      const GraphBudget& budget = {});

struct LPBudget {
    std::size_t max_cuts = 20'000;
    SimplexBudget simplex;
    GraphBudget graph;
};

struct FeasibilityResult {
    bool feasible = false;
    LPSolution solution;
    std::vector<CliqueCut> cuts;
    std::uint64_t simplex_pivots = 0;
    std::size_t rounds = 0;
};

/// Cutting-plane loop: solve, separate, add the violated clique, repeat. A feasible
/// result satisfies every maximal clique inequality of G_1 at bound q.
/// When `trace` is set, one line per cut: "cut q=<q> weight=<w> nodes=<e>:<v> ...".
FeasibilityResult solve_feasibility(const ConflictGraph& g1, int q, const LPBudget& budget = {},
                                    std::ostream* trace = nullptr);

struct QMinResult {
    int q_min = 0;
    FeasibilityResult feasible;
    /// Cuts used to certify each infeasible q < q_min.
    std::vector<std::size_t> infeasible_cut_counts;
};

/// Smallest q >= 1 for which the system is feasible; the working cut set restarts per q.
QMinResult find_q_min(const ConflictGraph& g1, const LPBudget& budget = {}, std::ostream* trace = nullptr);

/// Sum of x over the node set.
Rational clique_weight(const LPSolution& x, const std::vector<std::size_t>& nodes);

}  // namespace cfc
