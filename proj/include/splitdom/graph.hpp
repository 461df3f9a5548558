#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace splitdom {

/// Undirected simple graph on at most 32 vertices, one adjacency word per vertex.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n, std::string id = {}) : n_(n), id_(std::move(id)) {
        if (n < 1 || n > kMaxVertices)
            throw Error(ErrorCode::NTooLarge, "vertex count " + std::to_string(n) + " outside 1..32");
    }

    int order() const { return n_; }
    const std::string& id() const { return id_; }
    void set_id(std::string id) { id_ = std::move(id); }

    VertexSet vertices() const { return VertexSet::full(n_); }
    VertexSet neighbors(Vertex v) const { return adj_[v]; }
    VertexSet closed_neighbors(Vertex v) const { return adj_[v].with(v); }
    int degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += adj_[v].size();
        return twice / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(u));
        adj_[u] = adj_[u].with(v);
        adj_[v] = adj_[v].with(u);
    }

    /// Symmetric, irreflexive, and no bits at or above n.
    bool is_well_formed() const {
        const VertexSet all = vertices();
        for (Vertex u = 0; u < kMaxVertices; ++u) {
            if (u >= n_) {
                if (!adj_[u].empty()) return false;
                continue;
            }
            if (adj_[u].contains(u) || !adj_[u].is_subset_of(all)) return false;
            for (Vertex v : adj_[u])
                if (!adj_[v].contains(u)) return false;
        }
        return true;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw Error(ErrorCode::VertexOutOfRange,
                        "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n_ - 1));
    }

    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
    std::string id_;
};

inline Graph from_edge_list(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

/// Shape of the subgraph induced by V \ S.
enum class ComplementStatus { Empty, K1, Disconnected, ConnectedMultiple };

constexpr const char* to_string(ComplementStatus s) {
    switch (s) {
    case ComplementStatus::Empty: return "Empty";
    case ComplementStatus::K1: return "K1";
    case ComplementStatus::Disconnected: return "Disconnected";
    case ComplementStatus::ConnectedMultiple: return "ConnectedMultiple";
    }
    return "?";
}

/// Vertices of `within` reachable from `start` using only vertices of `within`.
inline VertexSet reach_within(const Graph& g, Vertex start, VertexSet within) {
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

inline ComplementStatus induced_status(const Graph& g, VertexSet s) {
    const VertexSet rest = s.complement(g.order());
    switch (rest.size()) {
    case 0: return ComplementStatus::Empty;
    case 1: return ComplementStatus::K1;
    default:
        return reach_within(g, rest.front(), rest) == rest ? ComplementStatus::ConnectedMultiple
                                                           : ComplementStatus::Disconnected;
    }
}

/// The removal of s leaves a K1 or a disconnected graph.
inline bool is_vertex_cut(const Graph& g, VertexSet s) {
    const auto st = induced_status(g, s);
    return st == ComplementStatus::Disconnected || st == ComplementStatus::K1;
}

/// N[S]
inline VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
    VertexSet out = s;
    for (Vertex v : s) out |= g.neighbors(v);
    return out;
}

inline bool is_connected(const Graph& g) {
    return reach_within(g, 0, g.vertices()) == g.vertices();
}

struct GraphStats {
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> diameter;  // nullopt when disconnected
    int kappa = 0;
    VertexSet kappa_witness;      // smallest cut, numerically least among those
    bool connected = false;
};

/// Eccentricity-based diameter by BFS from every vertex.
inline std::optional<int> diameter(const Graph& g) {
    const VertexSet all = g.vertices();
    int best = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        VertexSet seen = VertexSet::single(s), frontier = seen;
        int depth = 0;
        while (true) {
            VertexSet next;
            for (Vertex v : frontier) next |= g.neighbors(v);
            next -= seen;
            if (next.empty()) break;
            seen |= next;
            frontier = next;
            ++depth;
        }
        if (seen != all) return std::nullopt;
        best = std::max(best, depth);
    }
    return best;
}

/// Vertex connectivity by ascending-size cut enumeration. A K1 remainder counts as a cut,
/// which makes kappa(K_n) = n-1.
inline std::pair<int, VertexSet> vertex_connectivity(const Graph& g) {
    const int n = g.order();
    for (int k = 0; k < n; ++k) {
        std::optional<VertexSet> found;
        for_each_subset_of_size(n, k, [&](VertexSet s) {
            if (!is_vertex_cut(g, s)) return true;
            found = s;
            return false;
        });
        if (found) return {k, *found};
    }
    return {n - 1, VertexSet::full(n - 1)};  // unreachable: V minus one vertex is always a cut
}

inline GraphStats stats(const Graph& g) {
    GraphStats st;
    st.min_degree = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        st.min_degree = std::min(st.min_degree, g.degree(v));
        st.max_degree = std::max(st.max_degree, g.degree(v));
    }
    st.diameter = diameter(g);
    st.connected = st.diameter.has_value();
    std::tie(st.kappa, st.kappa_witness) = vertex_connectivity(g);
    return st;
}

} // namespace splitdom
