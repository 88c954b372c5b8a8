#include "cfc/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

Hypergraph::Hypergraph(int n, std::vector<std::vector<Vertex>> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw InputError("vertex count must be non-negative");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto& e = edges_[i];
        if (e.empty()) throw InputError("hyperedge " + std::to_string(i) + " is empty");
        for (Vertex v : e) {
            if (v < 1 || v > n_)
                throw InputError("hyperedge " + std::to_string(i) + " has vertex " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n_));
        }
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
    }
}

bool Hypergraph::contains(std::size_t e, Vertex v) const {
    const auto& edge = edges_.at(e);
    return std::binary_search(edge.begin(), edge.end(), v);
}

std::size_t Hypergraph::incidence_size() const {
    return std::accumulate(edges_.begin(), edges_.end(), std::size_t{0},
                           [](std::size_t acc, const auto& e) { return acc + e.size(); });
}

IntervalHypergraph::IntervalHypergraph(int n, std::vector<Interval> intervals)
    : n_(n), intervals_(std::move(intervals)) {
    if (n_ < 0) throw InputError("point count must be non-negative");
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        const auto& iv = intervals_[i];
        if (iv.l < 1 || iv.r > n_ || iv.l > iv.r)
            throw InputError("interval " + std::to_string(i) + " = [" + std::to_string(iv.l) + "," +
                             std::to_string(iv.r) + "] is not within 1.." + std::to_string(n_));
    }
}

Hypergraph IntervalHypergraph::to_hypergraph() const {
    std::vector<std::vector<Vertex>> edges;
    edges.reserve(intervals_.size());
    for (const auto& iv : intervals_) {
        std::vector<Vertex> e(static_cast<std::size_t>(iv.length()));
        std::iota(e.begin(), e.end(), iv.l);
        edges.push_back(std::move(e));
    }
    return Hypergraph(n_, std::move(edges));
}

IntervalHypergraph IntervalHypergraph::discrete(int n) {
    std::vector<Interval> all;
    for (Vertex l = 1; l <= n; ++l)
        for (Vertex r = l; r <= n; ++r) all.push_back({l, r});
    return IntervalHypergraph(n, std::move(all));
}

Colouring::Colouring(std::vector<int> colours) : colours_(std::move(colours)) {
    for (std::size_t i = 0; i < colours_.size(); ++i)
        if (colours_[i] < 0) throw InputError("vertex " + std::to_string(i + 1) + " has a negative colour");
}

void Colouring::set(Vertex v, int colour) {
    if (v < 1 || v > num_vertices()) throw InputError("vertex " + std::to_string(v) + " out of range");
    if (colour < 0) throw InputError("negative colour");
    colours_[static_cast<std::size_t>(v - 1)] = colour;
}

int Colouring::max_colour() const {
    return colours_.empty() ? 0 : *std::max_element(colours_.begin(), colours_.end());
}

int Colouring::colours_used() const {
    std::vector<int> nz;
    std::copy_if(colours_.begin(), colours_.end(), std::back_inserter(nz), [](int c) { return c != 0; });
    std::sort(nz.begin(), nz.end());
    return static_cast<int>(std::unique(nz.begin(), nz.end()) - nz.begin());
}

std::vector<Vertex> Colouring::colour_class(int colour) const {
    std::vector<Vertex> out;
    for (std::size_t i = 0; i < colours_.size(); ++i)
        if (colours_[i] == colour) out.push_back(static_cast<Vertex>(i + 1));
    return out;
}

std::optional<std::size_t> CFReport::first_failing_edge() const {
    for (std::size_t i = 0; i < witnesses.size(); ++i)
        if (!witnesses[i]) return i;
    return std::nullopt;
}

CFReport verify_cf(const Hypergraph& h, const Colouring& c) {
    if (c.num_vertices() != h.num_vertices())
        throw InputError("colouring covers " + std::to_string(c.num_vertices()) + " vertices, hypergraph has " +
                         std::to_string(h.num_vertices()));
    CFReport report;
    report.is_cf = true;
    report.witnesses.reserve(h.num_edges());
    for (const auto& e : h.edges()) {
        std::optional<Vertex> witness;
        for (Vertex v : e) {
            const int col = c[v];
            if (col == 0) continue;
            const auto same = std::count_if(e.begin(), e.end(), [&](Vertex u) { return c[u] == col; });
            if (same == 1) {
                witness = v;
                break;
            }
        }
        report.is_cf = report.is_cf && witness.has_value();
        report.witnesses.push_back(witness);
    }
    return report;
}

bool is_exact_hitting_set(const Hypergraph& h, std::span<const Vertex> s) {
    std::vector<char> in(static_cast<std::size_t>(h.num_vertices()) + 1, 0);
    for (Vertex v : s) {
        if (v < 1 || v > h.num_vertices()) throw InputError("vertex " + std::to_string(v) + " out of range");
        in[static_cast<std::size_t>(v)] = 1;
    }
    return std::all_of(h.edges().begin(), h.edges().end(), [&](const auto& e) {
        return std::count_if(e.begin(), e.end(), [&](Vertex v) { return in[static_cast<std::size_t>(v)] != 0; }) == 1;
    });
}

namespace {

std::vector<std::size_t> by_right_endpoint(const IntervalHypergraph& ih) {
    std::vector<std::size_t> order(ih.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = ih.interval(a);
        const auto& y = ih.interval(b);
        return x.r != y.r ? x.r < y.r : x.l > y.l;
    });
    return order;
}

}  // namespace

DisjointIntervals max_disjoint_intervals(const IntervalHypergraph& ih) {
    DisjointIntervals out;
    Vertex last_end = 0;
    for (std::size_t i : by_right_endpoint(ih)) {
        const auto& iv = ih.interval(i);
        if (iv.l > last_end) {
            out.witness.push_back(i);
            last_end = iv.r;
        }
    }
    out.count = out.witness.size();
    return out;
}

std::vector<Vertex> piercing_points(const IntervalHypergraph& ih) {
    std::vector<Vertex> points;
    for (std::size_t i : by_right_endpoint(ih)) {
        const auto& iv = ih.interval(i);
        if (points.empty() || iv.l > points.back()) points.push_back(iv.r);
    }
    return points;
}

std::vector<Vertex> clique_cover_points(const IntervalHypergraph& ih) {
    const auto disjoint = max_disjoint_intervals(ih);
    if (disjoint.count > 2)
        throw ContractError("clique_cover_points needs at most 2 pairwise disjoint intervals, found " +
                            std::to_string(disjoint.count));
    return piercing_points(ih);
}

}  // namespace cfc
