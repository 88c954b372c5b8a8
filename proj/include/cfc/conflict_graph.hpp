#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "cfc/graph.hpp"
#include "cfc/hypergraph.hpp"

namespace cfc {

/// Node (e, v, c) of G_k: hyperedge e is conflict-free coloured by vertex v with colour c.
struct ConflictNode {
    std::size_t edge_index = 0;
    Vertex vertex = 0;
    int colour = 1;

    friend auto operator<=>(const ConflictNode&, const ConflictNode&) = default;
};

enum class EdgeClass { edge, vertex, colour };

std::string_view to_string(EdgeClass c);

/// The conflict graph G_k(H). Nodes are ordered lexicographically by (edge, vertex, colour).
///
/// Two nodes (e,v,c), (g,u,d) are adjacent when
///   - e = g                                   (edge class),
///   - v = u and c != d                        (vertex class),
///   - c = d, u != v, {u,v} within e or g      (colour class).
class ConflictGraph {
public:
    ConflictGraph(const Hypergraph& h, int k);

    int colour_budget() const { return k_; }
    const Hypergraph& hypergraph() const { return h_; }
    const SimpleGraph& graph() const { return graph_; }
    std::size_t order() const { return nodes_.size(); }
    const std::vector<ConflictNode>& nodes() const { return nodes_; }
    const ConflictNode& node(std::size_t i) const { return nodes_.at(i); }

    /// Index of node (e, v, c), if it exists.
    std::optional<std::size_t> index_of(const ConflictNode& n) const;
    /// Contiguous node range [first, last) with hyperedge coordinate e.
    std::pair<std::size_t, std::size_t> edge_range(std::size_t e) const;

    /// Class tag of the graph edge {a, b}; priority edge > vertex > colour.
    std::optional<EdgeClass> edge_class(std::size_t a, std::size_t b) const;

private:
    Hypergraph h_;
    int k_;
    std::vector<ConflictNode> nodes_;
    std::vector<std::size_t> edge_offset_;
    SimpleGraph graph_;
};

/// Reads a colouring off an independent node set: v gets c if (e, v, c) is in the set, else 0.
Colouring independent_set_to_colouring(const ConflictGraph& g, std::span<const std::size_t> nodes);

/// One node (e, w, c(w)) per hyperedge, w the least conflict-free witness of e.
std::vector<std::size_t> colouring_to_conflict_free_set(const ConflictGraph& g, const Colouring& c);

struct MisColouring {
    int k_min = 0;
    Colouring colouring;
    /// alpha(G_k) for k = 1..k_min, in order.
    std::vector<std::size_t> independence_numbers;
};

/// Smallest k <= k_max with alpha(G_k) = m, and the colouring read from a maximum independent set.
MisColouring cf_number_via_mis(const Hypergraph& h, int k_max, const GraphBudget& budget = {});

}  // namespace cfc
