#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cfc/hypergraph.hpp"
#include "cfc/lp_solver.hpp"
#include "cfc/rational.hpp"

namespace cfc {

/// Raised when a rounding step would leave [0, 1] or the iteration guard trips. The
/// message carries a dump of the state at the failing step.
class RoundingAbort : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RoundingStep {
    std::size_t iteration = 0;
    std::size_t selected = 0;  ///< interval index I_i
    Vertex r = 0;
    Rational delta = 0;
    std::vector<std::size_t> shifted;  ///< intervals whose mass moved from r to r-1
    std::vector<std::size_t> shrunk;   ///< intervals that lost point r
};

struct RoundingResult {
    LPSolution solution;
    std::size_t iterations = 0;
    std::vector<RoundingStep> steps;
    /// B_opt(0), B_opt(1), ...; only filled when requested.
    std::vector<LPSolution> snapshots;
};

struct RoundingOptions {
    bool keep_snapshots = false;
    std::ostream* trace = nullptr;
};

/// Node index of x_{I,u} in G_1 order for an interval hypergraph.
class IntervalVariables {
public:
    explicit IntervalVariables(const IntervalHypergraph& ih);
    std::size_t index(std::size_t interval, Vertex u) const;
    std::size_t size() const { return total_; }

private:
    const IntervalHypergraph& ih_;
    std::vector<std::size_t> offset_;
    std::size_t total_ = 0;
};

/// Rounds a feasible point of the clique LP to an integral one by repeatedly moving the
/// mass at the right end of the longest live interval one point to the left.
RoundingResult round_solution(const LPSolution& b_opt, const IntervalHypergraph& ih, int q_min,
                              const RoundingOptions& options = {});

}  // namespace cfc
