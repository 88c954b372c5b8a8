#include "cfc/conflict_graph.hpp"

#include <algorithm>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

std::string_view to_string(EdgeClass c) {
    switch (c) {
        case EdgeClass::edge: return "edge";
        case EdgeClass::vertex: return "vertex";
        case EdgeClass::colour: return "colour";
    }
    return "?";
}

ConflictGraph::ConflictGraph(const Hypergraph& h, int k) : h_(h), k_(k) {
    if (k < 1) throw InputError("colour budget k must be at least 1, got " + std::to_string(k));
    edge_offset_.reserve(h.num_edges() + 1);
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        edge_offset_.push_back(nodes_.size());
        for (Vertex v : h.edge(e))
            for (int c = 1; c <= k; ++c) nodes_.push_back({e, v, c});
    }
    edge_offset_.push_back(nodes_.size());

    graph_ = SimpleGraph(nodes_.size());
    for (std::size_t a = 0; a < nodes_.size(); ++a)
        for (std::size_t b = a + 1; b < nodes_.size(); ++b)
            if (edge_class(a, b)) graph_.add_edge(a, b);
}

std::optional<std::size_t> ConflictGraph::index_of(const ConflictNode& n) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), n);
    if (it == nodes_.end() || *it != n) return std::nullopt;
    return static_cast<std::size_t>(it - nodes_.begin());
}

std::pair<std::size_t, std::size_t> ConflictGraph::edge_range(std::size_t e) const {
    return {edge_offset_.at(e), edge_offset_.at(e + 1)};
}

std::optional<EdgeClass> ConflictGraph::edge_class(std::size_t a, std::size_t b) const {
    if (a == b) return std::nullopt;
    const auto& x = nodes_[a];
    const auto& y = nodes_[b];
    if (x.edge_index == y.edge_index) return EdgeClass::edge;
    if (x.vertex == y.vertex && x.colour != y.colour) return EdgeClass::vertex;
    if (x.colour == y.colour && x.vertex != y.vertex) {
        const bool in_x = h_.contains(x.edge_index, y.vertex);  // x's edge holds x.vertex already
        const bool in_y = h_.contains(y.edge_index, x.vertex);
        if (in_x || in_y) return EdgeClass::colour;
    }
    return std::nullopt;
}

Colouring independent_set_to_colouring(const ConflictGraph& g, std::span<const std::size_t> nodes) {
    for (std::size_t i : nodes)
        if (i >= g.order()) throw InputError("conflict node index " + std::to_string(i) + " out of range");
    if (!g.graph().is_independent(nodes)) throw ContractError("node set is not independent in the conflict graph");
    auto c = Colouring::zeros(g.hypergraph().num_vertices());
    for (std::size_t i : nodes) c.set(g.node(i).vertex, g.node(i).colour);
    return c;
}

std::vector<std::size_t> colouring_to_conflict_free_set(const ConflictGraph& g, const Colouring& c) {
    const auto report = verify_cf(g.hypergraph(), c);
    if (auto bad = report.first_failing_edge())
        throw ContractError("colouring is not conflict-free on hyperedge " + std::to_string(*bad));
    if (c.max_colour() > g.colour_budget())
        throw ContractError("colouring uses colour " + std::to_string(c.max_colour()) + " beyond budget k = " +
                            std::to_string(g.colour_budget()));
    std::vector<std::size_t> out;
    out.reserve(report.witnesses.size());
    for (std::size_t e = 0; e < report.witnesses.size(); ++e) {
        const Vertex w = *report.witnesses[e];
        out.push_back(*g.index_of({e, w, c[w]}));
    }
    return out;
}

MisColouring cf_number_via_mis(const Hypergraph& h, int k_max, const GraphBudget& budget) {
    if (k_max < 1) throw InputError("k_max must be at least 1");
    MisColouring out;
    const std::size_t m = h.num_edges();
    for (int k = 1; k <= k_max; ++k) {
        const ConflictGraph g(h, k);
        if (g.order() > budget.max_search_order)
            throw ResourceError("conflict graph G_" + std::to_string(k) + " has " + std::to_string(g.order()) +
                                " nodes, budget " + std::to_string(budget.max_search_order));
        const auto mis = max_independent_set(g.graph(), budget);
        out.independence_numbers.push_back(mis.size);
        if (mis.size == m) {
            out.k_min = k;
            out.colouring = independent_set_to_colouring(g, mis.witness);
            return out;
        }
    }
    throw ResourceError("budget exceeded: no conflict-free colouring with at most " + std::to_string(k_max) +
                        " colours");
}

}  // namespace cfc
