#include "cfc/lp_solver.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

bool LPSolution::is_integral() const {
    return std::all_of(values.begin(), values.end(), [](const Rational& v) { return v == 0 || v == 1; });
}

Rational clique_weight(const LPSolution& x, const std::vector<std::size_t>& nodes) {
    Rational sum = 0;
    for (std::size_t i : nodes) sum += x.values.at(i);
    return sum;
}

LPInstance::LPInstance(const ConflictGraph& g1, int q) : g1_(g1), q_(q) {
    if (g1.colour_budget() != 1) throw InputError("the clique LP is defined on G_1 (k = 1)");
    if (q < 1) throw InputError("clique bound q must be at least 1");
}

void LPInstance::add_cut(CliqueCut cut) {
    std::sort(cut.nodes.begin(), cut.nodes.end());
    if (!g1_.graph().is_clique(cut.nodes)) throw ContractError("cut node set is not a clique of G_1");
    const bool spans_two = std::any_of(cut.nodes.begin(), cut.nodes.end(), [&](std::size_t v) {
        return g1_.node(v).edge_index != g1_.node(cut.nodes.front()).edge_index;
    });
    if (!spans_two) throw ContractError("cut clique has no colour-class edge");
    cuts_.push_back(std::move(cut));
}

bool LPInstance::satisfies_equalities(const LPSolution& x) const {
    if (x.values.size() != num_variables()) return false;
    for (const auto& v : x.values)
        if (v < 0 || v > 1) return false;
    for (std::size_t e = 0; e < g1_.hypergraph().num_edges(); ++e) {
        const auto [first, last] = g1_.edge_range(e);
        Rational sum = 0;
        for (std::size_t i = first; i < last; ++i) sum += x.values[i];
        if (sum != 1) return false;
    }
    return true;
}

bool LPInstance::satisfies_cuts(const LPSolution& x) const {
    return std::all_of(cuts_.begin(), cuts_.end(), [&](const CliqueCut& c) { return clique_weight(x, c.nodes) <= q_; });
}

namespace {

// Dense phase-1 tableau. Columns: structural x (n), then slack and artificial columns in
// the order rows were added. Cuts can be appended to a solved tableau; a cut violated at
// the current point gets its own artificial, so the next solve warm-starts from the basis.
class PhaseOneTableau {
public:
    explicit PhaseOneTableau(const LPInstance& lp) : n_(lp.num_variables()), width_(n_) {
        kind_.assign(n_, Kind::structural);
        cost_.assign(n_, Rational(0));
        const auto& g1 = lp.conflict_graph();
        for (std::size_t e = 0; e < g1.hypergraph().num_edges(); ++e) {
            const auto [first, last] = g1.edge_range(e);
            std::vector<std::size_t> support;
            for (std::size_t i = first; i < last; ++i) support.push_back(i);
            add_row(support, Rational(1), false);
        }
        for (const auto& cut : lp.cuts()) add_cut(cut, lp.bound());
    }

    // Row sum_{i in nodes} x_i + s = q, rewritten in terms of the current nonbasic columns.
    void add_cut(const CliqueCut& cut, int q) { add_row(cut.nodes, Rational(q), true); }

    std::optional<LPSolution> solve(const SimplexBudget& budget, std::uint64_t& pivots) {
        std::size_t degenerate_run = 0;
        for (;;) {
            const bool bland = degenerate_run >= kDegenerateLimit;
            const std::size_t entering = bland ? choose_entering_bland() : choose_entering_steepest();
            if (entering == width_) break;
            const std::size_t leaving = choose_leaving(entering);
            // Phase-1 objective is bounded below by zero, so a ratio row always exists.
            if (leaving == rows_.size()) throw ContractError("phase-1 simplex reported an unbounded ray");
            if (++pivots > budget.max_pivots)
                throw ResourceError("simplex exceeded " + std::to_string(budget.max_pivots) + " pivots");
            degenerate_run = sgn(rhs_[leaving]) == 0 ? degenerate_run + 1 : 0;
            pivot(leaving, entering);
        }
        if (sgn(neg_objective_) != 0) return std::nullopt;
        LPSolution x;
        x.values.assign(n_, Rational(0));
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (basis_[r] < n_) x.values[basis_[r]] = rhs_[r];
        return x;
    }

private:
    enum class Kind { structural, slack, artificial, retired };

    std::size_t add_column(Kind kind) {
        for (auto& row : rows_) row.emplace_back(0);
        cost_.emplace_back(0);
        kind_.push_back(kind);
        return width_++;
    }

    void add_row(const std::vector<std::size_t>& support, Rational rhs, bool with_slack) {
        std::vector<Rational> row(width_);
        for (std::size_t i : support) row[i] = 1;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::size_t b = basis_[r];
            if (sgn(row[b]) == 0) continue;
            const Rational factor = row[b];
            for (std::size_t c = 0; c < width_; ++c)
                if (sgn(rows_[r][c]) != 0) row[c] -= factor * rows_[r][c];
            rhs -= factor * rhs_[r];
        }
        rows_.push_back(std::move(row));
        rhs_.push_back(std::move(rhs));
        basis_.push_back(0);
        const std::size_t r = rows_.size() - 1;
        std::size_t slack = width_;
        if (with_slack) {
            slack = add_column(Kind::slack);
            rows_[r][slack] = 1;
        }
        if (with_slack && sgn(rhs_[r]) >= 0) {
            basis_[r] = slack;
            return;
        }
        // Violated (or equality) row: scale to a non-negative right-hand side and start it on an artificial.
        if (sgn(rhs_[r]) < 0) {
            for (auto& v : rows_[r]) v = -v;
            rhs_[r] = -rhs_[r];
        }
        const std::size_t art = add_column(Kind::artificial);
        rows_[r][art] = 1;
        basis_[r] = art;
        for (std::size_t c = 0; c < width_; ++c)
            if (kind_[c] != Kind::artificial && kind_[c] != Kind::retired && sgn(rows_[r][c]) != 0) cost_[c] -= rows_[r][c];
        neg_objective_ -= rhs_[r];
    }

    // Consecutive degenerate pivots after which Bland's rule takes over until the objective
    // strictly improves; every cycle is degenerate, so this cannot cycle.
    static constexpr std::size_t kDegenerateLimit = 8;

    bool may_enter(std::size_t c) const { return kind_[c] == Kind::structural || kind_[c] == Kind::slack; }

    // Bland: lowest-index improving column; artificials never re-enter.
    std::size_t choose_entering_bland() const {
        for (std::size_t c = 0; c < width_; ++c)
            if (may_enter(c) && sgn(cost_[c]) < 0) return c;
        return width_;
    }

    // Most negative reduced cost, lowest index on ties.
    std::size_t choose_entering_steepest() const {
        std::size_t best = width_;
        for (std::size_t c = 0; c < width_; ++c)
            if (may_enter(c) && sgn(cost_[c]) < 0 && (best == width_ || cost_[c] < cost_[best])) best = c;
        return best;
    }

    std::size_t choose_leaving(std::size_t col) const {
        std::size_t best = rows_.size();
        Rational best_ratio;
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (sgn(rows_[r][col]) <= 0) continue;
            Rational ratio = rhs_[r] / rows_[r][col];
            if (best == rows_.size() || ratio < best_ratio || (ratio == best_ratio && basis_[r] < basis_[best])) {
                best = r;
                best_ratio = std::move(ratio);
            }
        }
        return best;
    }

    void pivot(std::size_t pr, std::size_t pc) {
        auto& prow = rows_[pr];
        const Rational inv = 1 / prow[pc];
        std::vector<std::size_t> support;
        for (std::size_t c = 0; c < width_; ++c) {
            if (sgn(prow[c]) == 0) continue;
            prow[c] *= inv;
            support.push_back(c);
        }
        rhs_[pr] *= inv;

        auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
            if (sgn(row[pc]) == 0) return;
            const Rational factor = row[pc];
            for (std::size_t c : support) row[c] -= factor * prow[c];
            rhs -= factor * rhs_[pr];
        };
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (r != pr) eliminate(rows_[r], rhs_[r]);
        eliminate(cost_, neg_objective_);
        // A nonbasic artificial never re-enters, so its column is dropped from further updates.
        const std::size_t out = basis_[pr];
        if (kind_[out] == Kind::artificial) {
            kind_[out] = Kind::retired;
            for (auto& row : rows_) row[out] = 0;
            cost_[out] = 0;
        }
        basis_[pr] = pc;
    }

    std::size_t n_;
    std::size_t width_;
    std::vector<Kind> kind_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
    std::vector<Rational> cost_;
    Rational neg_objective_ = 0;
};

void write_cut(std::ostream& os, const ConflictGraph& g1, int q, const Rational& weight, const CliqueCut& cut) {
    os << "cut q=" << q << " weight=" << weight.get_str() << " nodes=";
    for (std::size_t i = 0; i < cut.nodes.size(); ++i) {
        const auto& node = g1.node(cut.nodes[i]);
        os << (i ? " " : "") << node.edge_index << ':' << node.vertex;
    }
    os << '\n';
}

}  // namespace

std::optional<LPSolution> find_feasible_point(const LPInstance& lp, const SimplexBudget& budget, std::uint64_t* pivots) {
    std::uint64_t local = 0;
    PhaseOneTableau tableau(lp);
    auto result = tableau.solve(budget, pivots ? *pivots : local);
    return result;
}

std::optional<CliqueCut> separation_max_weight_clique(const ConflictGraph& g1, const LPSolution& x, int q,
                                                      const GraphBudget& budget) {
    if (x.values.size() != g1.order()) throw InputError("LP solution does not match the conflict graph");
    const auto best = max_weight_clique(g1.graph(), x.values, budget);
    if (best.weight <= q) return std::nullopt;
    return CliqueCut{extend_to_maximal(g1.graph(), best.witness)};
}

namespace {

// Cutting-plane loop on an existing instance; cuts accumulate in lp.
bool cutting_plane_loop(PhaseOneTableau& tableau, LPInstance& lp, const LPBudget& budget, std::ostream* trace,
                        FeasibilityResult& out) {
    const auto& g1 = lp.conflict_graph();
    for (;;) {
        ++out.rounds;
        auto point = tableau.solve(budget.simplex, out.simplex_pivots);
        if (!point) return false;
        auto violated = separation_max_weight_clique(g1, *point, lp.bound(), budget.graph);
        if (!violated) {
            out.solution = std::move(*point);
            return true;
        }
        if (lp.cuts().size() >= budget.max_cuts)
            throw ResourceError("cutting-plane loop exceeded " + std::to_string(budget.max_cuts) + " cuts");
        if (trace) write_cut(*trace, g1, lp.bound(), clique_weight(*point, violated->nodes), *violated);
        tableau.add_cut(*violated, lp.bound());
        lp.add_cut(std::move(*violated));
    }
}

}  // namespace

FeasibilityResult solve_feasibility(const ConflictGraph& g1, int q, const LPBudget& budget, std::ostream* trace) {
    LPInstance lp(g1, q);
    PhaseOneTableau tableau(lp);
    FeasibilityResult out;
    out.feasible = cutting_plane_loop(tableau, lp, budget, trace, out);
    out.cuts = lp.cuts();
    return out;
}

QMinResult find_q_min(const ConflictGraph& g1, const LPBudget& budget, std::ostream* trace) {
    const auto m = static_cast<int>(g1.hypergraph().num_edges());
    if (m == 0) throw InputError("find_q_min needs at least one hyperedge");
    QMinResult out;
    for (int q = 1; q <= m; ++q) {
        auto result = solve_feasibility(g1, q, budget, trace);
        if (result.feasible) {
            out.q_min = q;
            out.feasible = std::move(result);
            return out;
        }
        out.infeasible_cut_counts.push_back(result.cuts.size());
    }
    // The all-ones bound q = m admits any one-node-per-hyperedge point.
    throw ContractError("clique LP infeasible at q = m");
}

}  // namespace cfc
