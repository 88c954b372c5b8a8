#include "cfc/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

SimpleGraph::SimpleGraph(std::size_t order) : rows_(order, NodeSet(order)) {}

std::size_t SimpleGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= order() || v >= order()) throw InputError("edge endpoint out of range");
    if (u == v) throw InputError("self-loop on node " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < order(); ++u)
        for (auto v = rows_[u].find_next(u); v != NodeSet::npos; v = rows_[u].find_next(v)) out.emplace_back(u, v);
    return out;
}

SimpleGraph SimpleGraph::complement() const {
    SimpleGraph c(order());
    for (std::size_t u = 0; u < order(); ++u) {
        c.rows_[u] = ~rows_[u];
        c.rows_[u].reset(u);
    }
    return c;
}

SimpleGraph SimpleGraph::induced(std::span<const std::size_t> nodes) const {
    SimpleGraph sub(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (adjacent(nodes[i], nodes[j])) sub.add_edge(i, j);
    return sub;
}

bool SimpleGraph::is_clique(std::span<const std::size_t> nodes) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (nodes[i] == nodes[j] || !adjacent(nodes[i], nodes[j])) return false;
    return true;
}

bool SimpleGraph::is_independent(std::span<const std::size_t> nodes) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = i + 1; j < nodes.size(); ++j)
            if (adjacent(nodes[i], nodes[j])) return false;
    return true;
}

namespace {

void check_order(const SimpleGraph& g, std::size_t cap, const char* what) {
    if (g.order() > cap)
        throw ResourceError(std::string(what) + ": graph order " + std::to_string(g.order()) +
                            " exceeds budget " + std::to_string(cap));
}

// Branch-and-bound over candidate sets; the bound is the sum, over a greedy colour-class
// partition of the candidates, of the heaviest weight in each class.
template <class W>
class CliqueSearch {
public:
    CliqueSearch(const SimpleGraph& g, std::span<const W> w, const GraphBudget& budget)
        : g_(g), w_(w), budget_(budget) {}

    std::pair<W, std::vector<std::size_t>> run(NodeSet candidates) {
        if (candidates.any()) expand(std::move(candidates));
        std::sort(best_.begin(), best_.end());
        return {best_w_, best_};
    }

private:
    void expand(NodeSet p) {
        std::vector<std::size_t> order;
        std::vector<W> bound;
        order.reserve(p.count());
        bound.reserve(p.count());
        NodeSet uncoloured = p;
        W acc = 0;
        while (uncoloured.any()) {
            NodeSet avail = uncoloured;
            W class_max = 0;
            const std::size_t first = order.size();
            for (auto v = avail.find_first(); v != NodeSet::npos; v = avail.find_next(v)) {
                order.push_back(v);
                if (w_[v] > class_max) class_max = w_[v];
                avail -= g_.neighbours(v);
            }
            acc += class_max;
            for (std::size_t i = first; i < order.size(); ++i) {
                bound.push_back(acc);
                uncoloured.reset(order[i]);
            }
        }
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_w_ + bound[i] <= best_w_) return;
            if (++branch_nodes_ > budget_.max_branch_nodes)
                throw ResourceError("clique search exceeded " + std::to_string(budget_.max_branch_nodes) +
                                    " branch nodes");
            const std::size_t v = order[i];
            current_.push_back(v);
            current_w_ += w_[v];
            NodeSet next = p & g_.neighbours(v);
            if (next.none()) {
                if (current_w_ > best_w_) {
                    best_w_ = current_w_;
                    best_ = current_;
                }
            } else {
                expand(std::move(next));
            }
            current_w_ -= w_[v];
            current_.pop_back();
            p.reset(v);
        }
    }

    const SimpleGraph& g_;
    std::span<const W> w_;
    const GraphBudget& budget_;
    std::uint64_t branch_nodes_ = 0;
    W best_w_ = 0;
    W current_w_ = 0;
    std::vector<std::size_t> best_;
    std::vector<std::size_t> current_;
};

class DsaturSearch {
public:
    DsaturSearch(const SimpleGraph& g, const GraphBudget& budget)
        : g_(g),
          n_(g.order()),
          budget_(budget),
          colour_(n_, 0),
          nbr_count_(n_, std::vector<int>(n_ + 2, 0)),
          saturation_(n_, 0) {}

    GraphColouring run() {
        if (n_ == 0) return {0, {}};
        const auto clique = max_clique(g_, budget_);
        lower_bound_ = static_cast<int>(clique.size());

        best_colour_ = greedy_dsatur();
        best_chi_ = *std::max_element(best_colour_.begin(), best_colour_.end());

        if (best_chi_ > lower_bound_) {
            int used = 0;
            for (std::size_t v : clique) assign(v, ++used);
            search(clique.size(), used);
        }
        return {best_chi_, best_colour_};
    }

private:
    void assign(std::size_t v, int c) {
        colour_[v] = c;
        const auto& nb = g_.neighbours(v);
        for (auto u = nb.find_first(); u != NodeSet::npos; u = nb.find_next(u))
            if (nbr_count_[u][static_cast<std::size_t>(c)]++ == 0) ++saturation_[u];
    }

    void unassign(std::size_t v) {
        const auto c = static_cast<std::size_t>(colour_[v]);
        colour_[v] = 0;
        const auto& nb = g_.neighbours(v);
        for (auto u = nb.find_first(); u != NodeSet::npos; u = nb.find_next(u))
            if (--nbr_count_[u][c] == 0) --saturation_[u];
    }

    std::size_t pick() const {
        std::size_t best = n_;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] != 0) continue;
            if (best == n_ || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
                best = v;
        }
        return best;
    }

    std::vector<int> greedy_dsatur() {
        std::vector<int> out(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            const std::size_t v = pick();
            int c = 1;
            while (nbr_count_[v][static_cast<std::size_t>(c)] != 0) ++c;
            assign(v, c);
        }
        out = colour_;
        for (std::size_t v = 0; v < n_; ++v) unassign(v);
        return out;
    }

    void search(std::size_t coloured, int used) {
        if (used >= best_chi_) return;
        if (coloured == n_) {
            best_chi_ = used;
            best_colour_ = colour_;
            return;
        }
        if (++branch_nodes_ > budget_.max_branch_nodes)
            throw ResourceError("colouring search exceeded " + std::to_string(budget_.max_branch_nodes) +
                                " branch nodes");
        const std::size_t v = pick();
        const int limit = std::min(used + 1, best_chi_ - 1);
        for (int c = 1; c <= limit; ++c) {
            if (nbr_count_[v][static_cast<std::size_t>(c)] != 0) continue;
            assign(v, c);
            search(coloured + 1, std::max(used, c));
            unassign(v);
            if (best_chi_ == lower_bound_) return;
        }
    }

    const SimpleGraph& g_;
    std::size_t n_;
    const GraphBudget& budget_;
    std::vector<int> colour_;
    std::vector<std::vector<int>> nbr_count_;
    std::vector<int> saturation_;
    std::vector<int> best_colour_;
    int best_chi_ = 0;
    int lower_bound_ = 0;
    std::uint64_t branch_nodes_ = 0;
};

class MaximalCliqueEnumerator {
public:
    MaximalCliqueEnumerator(const SimpleGraph& g, const GraphBudget& budget) : g_(g), budget_(budget) {}

    std::vector<std::vector<std::size_t>> run() {
        if (g_.order() > 0) expand(g_.all_nodes(), NodeSet(g_.order()));
        std::sort(out_.begin(), out_.end());
        return std::move(out_);
    }

private:
    void expand(NodeSet p, NodeSet x) {
        if (p.none()) {
            if (x.none()) {
                if (out_.size() >= budget_.max_cliques)
                    throw ResourceError("maximal clique enumeration exceeded " +
                                        std::to_string(budget_.max_cliques) + " cliques");
                auto clique = current_;
                std::sort(clique.begin(), clique.end());
                out_.push_back(std::move(clique));
            }
            return;
        }
        std::size_t pivot = NodeSet::npos;
        std::size_t pivot_hits = 0;
        const NodeSet px = p | x;
        for (auto u = px.find_first(); u != NodeSet::npos; u = px.find_next(u)) {
            const std::size_t hits = (p & g_.neighbours(u)).count();
            if (pivot == NodeSet::npos || hits > pivot_hits) {
                pivot = u;
                pivot_hits = hits;
            }
        }
        const NodeSet branch = p - g_.neighbours(pivot);
        for (auto v = branch.find_first(); v != NodeSet::npos; v = branch.find_next(v)) {
            current_.push_back(v);
            expand(p & g_.neighbours(v), x & g_.neighbours(v));
            current_.pop_back();
            p.reset(v);
            x.set(v);
        }
    }

    const SimpleGraph& g_;
    const GraphBudget& budget_;
    std::vector<std::size_t> current_;
    std::vector<std::vector<std::size_t>> out_;
};

// Grows induced paths s = p0, p1, ..., pk over nodes > s; a node adjacent to p0 closes a
// chordless cycle and is never extended through.
class OddHoleSearch {
public:
    OddHoleSearch(const SimpleGraph& g, int max_len, const GraphBudget& budget)
        : g_(g), max_len_(static_cast<std::size_t>(max_len)), budget_(budget) {}

    std::optional<std::vector<std::size_t>> run() {
        const std::size_t n = g_.order();
        for (std::size_t s = 0; s < n; ++s) {
            NodeSet above(n);
            for (std::size_t v = s + 1; v < n; ++v) above.set(v);
            const NodeSet first = g_.neighbours(s) & above;
            path_ = {s};
            for (auto p1 = first.find_first(); p1 != NodeSet::npos; p1 = first.find_next(p1)) {
                path_.push_back(p1);
                NodeSet blocked(n);
                blocked.set(s);
                blocked.set(p1);
                if (extend(above, blocked)) return path_;
                path_.pop_back();
            }
        }
        return std::nullopt;
    }

private:
    // `blocked` holds the path plus the neighbourhoods of p1..p(k-1).
    bool extend(const NodeSet& above, const NodeSet& blocked) {
        if (++branch_nodes_ > budget_.max_branch_nodes)
            throw ResourceError("odd hole search exceeded " + std::to_string(budget_.max_branch_nodes) +
                                " branch nodes");
        const std::size_t s = path_.front();
        const std::size_t last = path_.back();
        const NodeSet cand = (g_.neighbours(last) & above) - blocked;
        for (auto v = cand.find_first(); v != NodeSet::npos; v = cand.find_next(v)) {
            const std::size_t cycle_len = path_.size() + 1;
            if (g_.adjacent(v, s)) {
                if (path_.size() >= 2 && cycle_len >= 5 && cycle_len % 2 == 1 && cycle_len <= max_len_ &&
                    path_[1] < v) {
                    path_.push_back(v);
                    return true;
                }
                continue;
            }
            if (cycle_len + 1 > max_len_) continue;
            NodeSet next = blocked | g_.neighbours(last);
            next.set(v);
            path_.push_back(v);
            if (extend(above, next)) return true;
            path_.pop_back();
        }
        return false;
    }

    const SimpleGraph& g_;
    std::size_t max_len_;
    const GraphBudget& budget_;
    std::vector<std::size_t> path_;
    std::uint64_t branch_nodes_ = 0;
};

std::vector<Rational> validated(std::span<const Rational> weights, std::size_t order) {
    if (weights.size() != order) throw InputError("weight vector length does not match graph order");
    for (const auto& w : weights)
        if (sgn(w) < 0) throw InputError("negative clique weight " + w.get_str());
    return {weights.begin(), weights.end()};
}

}  // namespace

std::vector<std::size_t> max_clique(const SimpleGraph& g, const GraphBudget& budget) {
    check_order(g, budget.max_search_order, "max_clique");
    const std::vector<std::int64_t> ones(g.order(), 1);
    CliqueSearch<std::int64_t> search(g, ones, budget);
    return search.run(g.all_nodes()).second;
}

IndependentSet max_independent_set(const SimpleGraph& g, const GraphBudget& budget) {
    auto witness = max_clique(g.complement(), budget);
    return {witness.size(), std::move(witness)};
}

WeightedClique max_weight_clique(const SimpleGraph& g, std::span<const Rational> weights,
                                 const GraphBudget& budget) {
    check_order(g, budget.max_search_order, "max_weight_clique");
    const auto w = validated(weights, g.order());

    NodeSet positive(g.order());
    for (std::size_t v = 0; v < g.order(); ++v)
        if (sgn(w[v]) > 0) positive.set(v);

    // Scale to a common denominator and search over machine integers when they fit.
    mpz_class denom = 1;
    for (const auto& x : w) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), x.get_den_mpz_t());
    std::vector<std::int64_t> scaled(w.size(), 0);
    mpz_class total = 0;
    bool fits = true;
    for (std::size_t v = 0; v < w.size() && fits; ++v) {
        const mpz_class s = w[v].get_num() * (denom / w[v].get_den());
        total += s;
        fits = s.fits_slong_p() && total.fits_slong_p();
        if (fits) scaled[v] = s.get_si();
    }
    WeightedClique out;
    if (fits) {
        CliqueSearch<std::int64_t> search(g, scaled, budget);
        auto [best, witness] = search.run(positive);
        out.weight = Rational(mpz_class(best), denom);
        out.weight.canonicalize();
        out.witness = std::move(witness);
    } else {
        CliqueSearch<Rational> search(g, w, budget);
        auto [best, witness] = search.run(positive);
        out.weight = best;
        out.witness = std::move(witness);
    }
    return out;
}

GraphColouring chromatic_number_exact(const SimpleGraph& g, const GraphBudget& budget) {
    check_order(g, budget.max_exact_order, "chromatic_number_exact");
    DsaturSearch search(g, budget);
    return search.run();
}

std::vector<std::vector<std::size_t>> enumerate_maximal_cliques(const SimpleGraph& g, const GraphBudget& budget) {
    check_order(g, budget.max_search_order, "enumerate_maximal_cliques");
    MaximalCliqueEnumerator e(g, budget);
    return e.run();
}

BergeReport is_berge(const SimpleGraph& g, int max_len, const GraphBudget& budget) {
    check_order(g, budget.max_exact_order, "is_berge");
    BergeReport report;
    if (max_len < 5) return report;
    if (auto hole = OddHoleSearch(g, max_len, budget).run()) {
        report.is_berge = false;
        report.certificate = std::move(*hole);
        return report;
    }
    const SimpleGraph co = g.complement();
    if (auto hole = OddHoleSearch(co, max_len, budget).run()) {
        report.is_berge = false;
        report.certificate = std::move(*hole);
        report.antihole = true;
    }
    return report;
}

std::vector<std::size_t> extend_to_maximal(const SimpleGraph& g, std::vector<std::size_t> clique) {
    NodeSet common = g.all_nodes();
    for (std::size_t v : clique) {
        common &= g.neighbours(v);
    }
    for (auto v = common.find_first(); v != NodeSet::npos; v = common.find_next(v)) {
        clique.push_back(v);
        common &= g.neighbours(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

bool is_proper_colouring(const SimpleGraph& g, std::span<const int> colour) {
    if (colour.size() != g.order()) return false;
    for (const auto& [u, v] : g.edges())
        if (colour[u] == colour[v]) return false;
    return true;
}

}  // namespace cfc
