#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cfc/cooccurrence.hpp"
#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"
#include "cfc/lp_solver.hpp"

namespace cfc {

enum class Branch { exactly_hittable, clique_cover_2, lp_pipeline };

std::string_view to_string(Branch b);

struct HittingSetCertificate {
    std::vector<Vertex> hitting_set;
};

struct PiercingCertificate {
    std::vector<Vertex> points;
};

/// Outcome of the rounding step on the LP point at q_min: accepted, or rejected because the
/// point breaks a clique inequality, the rounding aborted, or chi(Gamma_t) exceeds q_min.
enum class RoundingOutcome { integral_feasible, clique_violation, aborted, chromatic_excess };

std::string_view to_string(RoundingOutcome r);

struct LpCertificate {
    int q_min = 0;
    RepresentativeFunction t;
    std::vector<Vertex> gamma_vertices;
    std::vector<std::pair<Vertex, Vertex>> gamma_edges;
    int gamma_clique_number = 0;
    std::size_t cuts = 0;
    std::size_t rounding_iterations = 0;
    bool lp_integral = false;
    RoundingOutcome rounding = RoundingOutcome::integral_feasible;
    /// Nodes of the representative-function search run when the rounded point was rejected; 0 otherwise.
    std::uint64_t integral_search_nodes = 0;
};

using Certificate = std::variant<HittingSetCertificate, PiercingCertificate, LpCertificate>;

struct CFCResult {
    int chi_cf = 0;
    Colouring colouring;
    Branch branch = Branch::exactly_hittable;
    Certificate certificate;
};

struct SolverOptions {
    LPBudget lp;
    GraphBudget graph;
    std::ostream* lp_trace = nullptr;
    std::ostream* rounding_trace = nullptr;
};

/// Exact hitting set of an interval family by a left-to-right scan over consecutive
/// chosen points, or nullopt if none exists.
std::optional<std::vector<Vertex>> exact_hittable_intervals(const IntervalHypergraph& ih);

/// Minimum conflict-free colouring of an interval hypergraph.
CFCResult solve(const IntervalHypergraph& ih, const SolverOptions& options = {});

struct EhsPart {
    std::vector<std::size_t> edges;
    std::vector<Vertex> hitting_set;
};

/// Groups hyperedges by the colour of their least conflict-free witness; each group's
/// witnesses form an exact hitting set of it. Empty groups are omitted.
std::vector<EhsPart> partition_from_colouring(const Hypergraph& h, const Colouring& c);

/// Conflict-free colouring with at most parts.size() colours from a partition of the
/// intervals into exactly hit families.
Colouring colouring_from_partition(const IntervalHypergraph& ih, const std::vector<EhsPart>& parts,
                                   const GraphBudget& budget = {});

}  // namespace cfc
