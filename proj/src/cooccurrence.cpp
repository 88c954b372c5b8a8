#include "cfc/cooccurrence.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "cfc/errors.hpp"

namespace cfc {

RepresentativeFunction::RepresentativeFunction(const Hypergraph& h, std::vector<Vertex> reps)
    : reps_(std::move(reps)) {
    if (reps_.size() != h.num_edges())
        throw InputError("representative function has " + std::to_string(reps_.size()) + " entries for " +
                         std::to_string(h.num_edges()) + " hyperedges");
    for (std::size_t e = 0; e < reps_.size(); ++e)
        if (!h.contains(e, reps_[e]))
            throw InputError("representative " + std::to_string(reps_[e]) + " is not in hyperedge " +
                             std::to_string(e));
}

std::vector<Vertex> RepresentativeFunction::image() const {
    std::vector<Vertex> img = reps_;
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
}

CoOccurrenceGraph::CoOccurrenceGraph(const Hypergraph& h, const RepresentativeFunction& t) {
    if (t.size() != h.num_edges()) throw InputError("representative function does not match the hypergraph");
    vertices_ = t.image();
    represented_.resize(vertices_.size());
    graph_ = SimpleGraph(vertices_.size());
    for (std::size_t e = 0; e < h.num_edges(); ++e) {
        if (!h.contains(e, t[e])) throw InputError("t(e) is not in hyperedge " + std::to_string(e));
        const std::size_t rep = *index_of(t[e]);
        represented_[rep].push_back(e);
        for (Vertex u : h.edge(e)) {
            if (u == t[e]) continue;
            if (auto other = index_of(u)) graph_.add_edge(rep, *other);
        }
    }
}

std::optional<std::size_t> CoOccurrenceGraph::index_of(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::vector<std::pair<Vertex, Vertex>> CoOccurrenceGraph::vertex_edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const auto& [a, b] : graph_.edges()) out.emplace_back(vertices_[a], vertices_[b]);
    return out;
}

Colouring extend_colouring(const Hypergraph& h, const RepresentativeFunction& t, std::span<const int> proper) {
    const CoOccurrenceGraph gamma(h, t);
    if (proper.size() != gamma.vertices().size())
        throw InputError("colouring of Gamma_t has " + std::to_string(proper.size()) + " entries for " +
                         std::to_string(gamma.vertices().size()) + " vertices");
    for (const auto& [a, b] : gamma.graph().edges())
        if (proper[a] == proper[b])
            throw ContractError("Gamma_t colouring is not proper: edge (" + std::to_string(gamma.vertices()[a]) +
                                "," + std::to_string(gamma.vertices()[b]) + ") is monochromatic");
    // Palette compressed onto 1..chi keeping the relative order of the input colours.
    std::map<int, int> renumber;
    for (int col : proper) renumber.emplace(col, 0);
    int next = 0;
    for (auto& [col, rank] : renumber) rank = ++next;
    auto c = Colouring::zeros(h.num_vertices());
    for (std::size_t i = 0; i < proper.size(); ++i) c.set(gamma.vertices()[i], renumber.at(proper[i]));
    return c;
}

std::uint64_t representative_function_count(const Hypergraph& h) {
    std::uint64_t total = 1;
    for (const auto& e : h.edges()) {
        if (total > std::numeric_limits<std::uint64_t>::max() / e.size()) return std::numeric_limits<std::uint64_t>::max();
        total *= e.size();
    }
    return total;
}

RepresentativeFunction representative_function_at(const Hypergraph& h, std::uint64_t index) {
    std::vector<Vertex> reps(h.num_edges());
    for (std::size_t e = h.num_edges(); e-- > 0;) {
        const auto& edge = h.edge(e);
        reps[e] = edge[index % edge.size()];
        index /= edge.size();
    }
    return RepresentativeFunction(h, std::move(reps));
}

namespace {

class RepresentativeDfs {
public:
    RepresentativeDfs(const Hypergraph& h, int q, const GraphBudget& budget)
        : h_(h), q_(q), budget_(budget), size_(static_cast<std::size_t>(h.num_vertices()) + 1), reps_(h.num_edges(), 0) {
        for (const auto& e : h.edges()) {
            NodeSet m(size_);
            for (Vertex v : e) m.set(static_cast<std::size_t>(v));
            members_.push_back(std::move(m));
        }
    }

    RepresentativeSearch run() {
        RepresentativeSearch out;
        State root{NodeSet(size_), std::vector<NodeSet>(size_, NodeSet(size_))};
        out.t = visit(root, h_.num_edges());
        out.nodes = nodes_;
        return out;
    }

private:
    struct State {
        NodeSet image;
        std::vector<NodeSet> adj;
    };

    // Assigns t(e) = u on a copy of the state; nullopt if that closes a clique of q + 1 vertices.
    std::optional<State> assign(const State& state, std::size_t e, Vertex u) const {
        State next = state;
        const auto ui = static_cast<std::size_t>(u);
        NodeSet linked = members_[e] & next.image;
        if (!next.image.test(ui)) {
            for (std::size_t g = 0; g < reps_.size(); ++g)
                if (reps_[g] != 0 && members_[g].test(ui)) linked.set(static_cast<std::size_t>(reps_[g]));
            next.image.set(ui);
        }
        linked.reset(ui);
        for (auto v = linked.find_first(); v != NodeSet::npos; v = linked.find_next(v)) {
            next.adj[ui].set(v);
            next.adj[v].set(ui);
        }
        if (has_clique(next, next.adj[ui], q_)) return std::nullopt;
        return next;
    }

    // Unassigned edge with the fewest viable representatives (lowest index on ties), with them.
    std::pair<std::size_t, std::vector<std::pair<Vertex, State>>> most_constrained(const State& state) const {
        std::size_t best = reps_.size();
        std::vector<std::pair<Vertex, State>> best_options;
        for (std::size_t e = 0; e < reps_.size(); ++e) {
            if (reps_[e] != 0) continue;
            std::vector<std::pair<Vertex, State>> options;
            // Vertices already representing an edge first: they add the fewest new edges.
            for (int pass = 0; pass < 2; ++pass)
                for (Vertex v : h_.edge(e))
                    if (state.image.test(static_cast<std::size_t>(v)) == (pass == 0))
                        if (auto next = assign(state, e, v)) options.emplace_back(v, std::move(*next));
            if (best == reps_.size() || options.size() < best_options.size()) {
                best = e;
                best_options = std::move(options);
                if (best_options.empty()) break;
            }
        }
        return {best, std::move(best_options)};
    }

    std::optional<RepresentativeFunction> visit(const State& state, std::size_t unassigned) {
        if (++nodes_ > budget_.max_branch_nodes)
            throw ResourceError("representative search exceeded " + std::to_string(budget_.max_branch_nodes) + " nodes");
        if (unassigned == 0) {
            RepresentativeFunction t(h_, reps_);
            const CoOccurrenceGraph gamma(h_, t);
            if (chromatic_number_exact(gamma.graph(), budget_).chi <= q_) return t;
            return std::nullopt;
        }
        auto [e, options] = most_constrained(state);
        for (auto& [u, next] : options) {
            reps_[e] = u;
            if (auto found = visit(next, unassigned - 1)) return found;
        }
        reps_[e] = 0;
        return std::nullopt;
    }

    // True if `candidates` holds a clique of `size` vertices.
    static bool has_clique(const State& state, const NodeSet& candidates, int size) {
        if (size == 0) return true;
        if (candidates.count() < static_cast<std::size_t>(size)) return false;
        for (auto v = candidates.find_first(); v != NodeSet::npos; v = candidates.find_next(v)) {
            NodeSet rest = candidates & state.adj[v];
            for (auto w = rest.find_first(); w != NodeSet::npos && w <= v; w = rest.find_next(w)) rest.reset(w);
            if (has_clique(state, rest, size - 1)) return true;
        }
        return false;
    }

    const Hypergraph& h_;
    int q_;
    const GraphBudget& budget_;
    std::size_t size_;
    std::vector<NodeSet> members_;
    std::vector<Vertex> reps_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

RepresentativeSearch find_representative_function(const Hypergraph& h, int q, const GraphBudget& budget) {
    if (q < 1) throw InputError("colour bound must be at least 1");
    if (h.num_edges() == 0) return {RepresentativeFunction(h, {}), 0};
    return RepresentativeDfs(h, q, budget).run();
}

}  // namespace cfc
