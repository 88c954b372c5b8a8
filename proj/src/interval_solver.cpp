#include "cfc/interval_solver.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "cfc/conflict_graph.hpp"
#include "cfc/errors.hpp"
#include "cfc/rounding.hpp"

namespace cfc {

std::string_view to_string(Branch b) {
    switch (b) {
        case Branch::exactly_hittable: return "exactly_hittable";
        case Branch::clique_cover_2: return "clique_cover_2";
        case Branch::lp_pipeline: return "lp_pipeline";
    }
    return "?";
}

std::string_view to_string(RoundingOutcome r) {
    switch (r) {
        case RoundingOutcome::integral_feasible: return "integral_feasible";
        case RoundingOutcome::clique_violation: return "clique_violation";
        case RoundingOutcome::aborted: return "aborted";
        case RoundingOutcome::chromatic_excess: return "chromatic_excess";
    }
    return "?";
}

std::optional<std::vector<Vertex>> exact_hittable_intervals(const IntervalHypergraph& ih) {
    if (ih.empty()) return std::vector<Vertex>{};
    const int n = ih.num_points();
    const auto N = static_cast<std::size_t>(n);
    constexpr Vertex kNoPoint = 0;

    // Consecutive chosen points p < p' are compatible iff no interval holds both
    // (p' > reach_right[p]) and no interval lies strictly between them (p' <= first_close[p]).
    std::vector<Vertex> reach_right(N + 1, 0);
    std::vector<Vertex> first_close(N + 1, std::numeric_limits<Vertex>::max());
    Vertex min_r = std::numeric_limits<Vertex>::max();
    Vertex max_l = 0;
    for (const auto& iv : ih.intervals()) {
        reach_right[static_cast<std::size_t>(iv.l)] = std::max(reach_right[static_cast<std::size_t>(iv.l)], iv.r);
        min_r = std::min(min_r, iv.r);
        max_l = std::max(max_l, iv.l);
    }
    for (std::size_t p = 1; p <= N; ++p) reach_right[p] = std::max(reach_right[p], reach_right[p - 1]);
    for (const auto& iv : ih.intervals())
        for (Vertex p = 0; p < iv.l; ++p)
            first_close[static_cast<std::size_t>(p)] = std::min(first_close[static_cast<std::size_t>(p)], iv.r);

    // pred[p]: previous chosen point on a valid prefix ending at p (kNoPoint = p is first).
    std::vector<std::optional<Vertex>> pred(N + 1);
    for (Vertex p = 1; p <= n; ++p) {
        if (p <= min_r) {
            pred[static_cast<std::size_t>(p)] = kNoPoint;
            continue;
        }
        for (Vertex q = 1; q < p; ++q) {
            const auto qi = static_cast<std::size_t>(q);
            if (pred[qi] && p > reach_right[qi] && p <= first_close[qi]) {
                pred[static_cast<std::size_t>(p)] = q;
                break;
            }
        }
    }
    for (Vertex last = std::max<Vertex>(max_l, 1); last <= n; ++last) {
        if (!pred[static_cast<std::size_t>(last)]) continue;
        std::vector<Vertex> s;
        for (Vertex p = last; p != kNoPoint; p = *pred[static_cast<std::size_t>(p)]) s.push_back(p);
        std::reverse(s.begin(), s.end());
        return s;
    }
    return std::nullopt;
}

namespace {

CFCResult solve_lp_branch(const IntervalHypergraph& ih, const SolverOptions& options) {
    const Hypergraph h = ih.to_hypergraph();
    const ConflictGraph g1(h, 1);
    const auto q = find_q_min(g1, options.lp, options.lp_trace);

    RoundingOptions rounding_options;
    rounding_options.trace = options.rounding_trace;
    LPSolution integral;
    std::size_t rounding_iterations = 0;
    RoundingOutcome outcome = RoundingOutcome::integral_feasible;
    try {
        auto rounded = round_solution(q.feasible.solution, ih, q.q_min, rounding_options);
        rounding_iterations = rounded.iterations;
        if (separation_max_weight_clique(g1, rounded.solution, q.q_min, options.graph))
            outcome = RoundingOutcome::clique_violation;
        else
            integral = std::move(rounded.solution);
    } catch (const RoundingAbort&) {
        outcome = RoundingOutcome::aborted;
    }

    int chi = q.q_min;
    std::optional<RepresentativeFunction> t;
    if (outcome == RoundingOutcome::integral_feasible) {
        const IntervalVariables vars(ih);
        std::vector<Vertex> reps;
        reps.reserve(ih.size());
        for (std::size_t i = 0; i < ih.size(); ++i) {
            const auto& iv = ih.interval(i);
            for (Vertex u = iv.l; u <= iv.r; ++u)
                if (integral.values[vars.index(i, u)] == 1) reps.push_back(u);
        }
        t.emplace(h, std::move(reps));
        if (chromatic_number_exact(CoOccurrenceGraph(h, *t).graph(), options.graph).chi > q.q_min) {
            outcome = RoundingOutcome::chromatic_excess;
            t.reset();
        }
    }

    // Rejected rounding: search representative functions directly, from q_min upwards.
    // q_min is a lower bound since any conflict-free colouring gives an integral feasible point.
    std::uint64_t search_nodes = 0;
    while (!t) {
        auto found = find_representative_function(h, chi, options.graph);
        search_nodes += found.nodes;
        if (found.t)
            t = std::move(found.t);
        else
            ++chi;
    }
    const CoOccurrenceGraph gamma(h, *t);
    const auto proper = chromatic_number_exact(gamma.graph(), options.graph);

    CFCResult out;
    out.branch = Branch::lp_pipeline;
    out.colouring = extend_colouring(h, *t, proper.colour);
    out.chi_cf = chi;

    if (!verify_cf(h, out.colouring).is_cf) throw ContractError("LP pipeline produced a colouring that is not conflict-free");
    if (out.colouring.colours_used() != chi)
        throw ContractError("LP pipeline used " + std::to_string(out.colouring.colours_used()) +
                            " colours but the clique bound is " + std::to_string(chi));

    LpCertificate cert;
    cert.q_min = q.q_min;
    cert.t = *t;
    cert.gamma_vertices = gamma.vertices();
    cert.gamma_edges = gamma.vertex_edges();
    cert.gamma_clique_number = static_cast<int>(max_clique(gamma.graph(), options.graph).size());
    cert.cuts = q.feasible.cuts.size();
    cert.rounding_iterations = rounding_iterations;
    cert.lp_integral = q.feasible.solution.is_integral();
    cert.rounding = outcome;
    cert.integral_search_nodes = search_nodes;
    out.certificate = std::move(cert);
    return out;
}

}  // namespace

CFCResult solve(const IntervalHypergraph& ih, const SolverOptions& options) {
    if (ih.empty()) throw InputError("solve needs at least one interval");
    const int n = ih.num_points();

    if (auto hits = exact_hittable_intervals(ih)) {
        CFCResult out;
        out.chi_cf = 1;
        out.branch = Branch::exactly_hittable;
        out.colouring = Colouring::zeros(n);
        for (Vertex v : *hits) out.colouring.set(v, 1);
        out.certificate = HittingSetCertificate{std::move(*hits)};
        return out;
    }
    if (max_disjoint_intervals(ih).count < 3) {
        auto points = clique_cover_points(ih);
        // A single piercing point would be an exact hitting set.
        if (points.size() != 2) throw ContractError("expected two piercing points on a non exactly hittable family");
        CFCResult out;
        out.chi_cf = 2;
        out.branch = Branch::clique_cover_2;
        out.colouring = Colouring::zeros(n);
        out.colouring.set(points[0], 1);
        out.colouring.set(points[1], 2);
        out.certificate = PiercingCertificate{std::move(points)};
        return out;
    }
    return solve_lp_branch(ih, options);
}

std::vector<EhsPart> partition_from_colouring(const Hypergraph& h, const Colouring& c) {
    const auto report = verify_cf(h, c);
    if (auto bad = report.first_failing_edge())
        throw ContractError("colouring is not conflict-free on hyperedge " + std::to_string(*bad));
    std::map<int, EhsPart> by_colour;
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        const Vertex w = *report.witnesses[e];
        auto& part = by_colour[c[w]];
        part.edges.push_back(e);
        part.hitting_set.push_back(w);
    }
    std::vector<EhsPart> out;
    for (auto& [colour, part] : by_colour) {
        std::sort(part.hitting_set.begin(), part.hitting_set.end());
        part.hitting_set.erase(std::unique(part.hitting_set.begin(), part.hitting_set.end()), part.hitting_set.end());
        out.push_back(std::move(part));
    }
    return out;
}

Colouring colouring_from_partition(const IntervalHypergraph& ih, const std::vector<EhsPart>& parts,
                                   const GraphBudget& budget) {
    const Hypergraph h = ih.to_hypergraph();
    std::vector<int> owner(ih.size(), -1);
    std::vector<Vertex> reps(ih.size(), 0);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        for (Vertex v : parts[p].hitting_set)
            if (v < 1 || v > ih.num_points())
                throw InputError("part " + std::to_string(p) + ": hitting set vertex " + std::to_string(v) + " out of range");
        for (std::size_t e : parts[p].edges) {
            if (e >= ih.size()) throw InputError("part " + std::to_string(p) + ": edge " + std::to_string(e) + " out of range");
            if (owner[e] >= 0)
                throw InputError("edge " + std::to_string(e) + " appears in parts " + std::to_string(owner[e]) +
                                 " and " + std::to_string(p));
            owner[e] = static_cast<int>(p);
            const auto& iv = ih.interval(e);
            int hits = 0;
            for (Vertex v : parts[p].hitting_set) {
                if (iv.contains(v)) {
                    ++hits;
                    reps[e] = v;
                }
            }
            if (hits != 1)
                throw InputError("part " + std::to_string(p) + ": hitting set meets edge " + std::to_string(e) + " " +
                                 std::to_string(hits) + " times");
        }
    }
    for (std::size_t e = 0; e < owner.size(); ++e)
        if (owner[e] < 0) throw InputError("edge " + std::to_string(e) + " is in no part");

    const RepresentativeFunction t(h, std::move(reps));
    const CoOccurrenceGraph gamma(h, t);
    const auto proper = chromatic_number_exact(gamma.graph(), budget);
    return extend_colouring(h, t, proper.colour);
}

}  // namespace cfc
