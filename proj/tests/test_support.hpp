#pragma once

#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "splitdom/splitdom.hpp"

namespace splitdom::testing {

inline std::vector<std::string> corpus_lines() {
    std::ifstream in(std::string(SPLITDOM_TEST_DATA) + "/connected_2_7.g6");
    return read_lines(in);
}

/// Connected graphs from the shipped corpus with lo <= n <= hi.
inline std::vector<Graph> corpus(int lo, int hi) {
    std::vector<Graph> out;
    int k = 0;
    for (const auto& line : corpus_lines()) {
        ++k;
        Graph g = parse_graph6(line);
        if (g.order() < lo || g.order() > hi) continue;
        g.set_id("line:" + std::to_string(k));
        out.push_back(std::move(g));
    }
    return out;
}

inline std::vector<std::string> corpus_subset(int lo, int hi) {
    std::vector<std::string> out;
    for (const auto& line : corpus_lines()) {
        const int n = line[0] - 63;
        if (n >= lo && n <= hi) out.push_back(line);
    }
    return out;
}

/// G(n, p) with n in [lo, hi] and p in [0.2, 0.7], resampled until connected.
inline Graph random_connected(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> order(lo, hi);
    std::uniform_real_distribution<double> density(0.2, 0.7), coin(0.0, 1.0);
    const int n = order(rng);
    const double p = density(rng);
    while (true) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (is_connected(g)) return g;
    }
}

/// Brute-force vertex connectivity straight from the cut definition.
inline int brute_kappa(const Graph& g) {
    int best = g.order();
    for (std::uint32_t s = 0; s < (1u << g.order()); ++s)
        if (is_vertex_cut(g, VertexSet(s))) best = std::min(best, VertexSet(s).size());
    return best;
}

/// Re-checks a solver result through the predicates: witness qualifies and has the right size.
inline bool witness_valid(const Graph& g, ParameterId pid, const ParamResult& r) {
    if (!r.defined()) return true;
    if (r.witness().size() != r.value()) return false;
    if (pid == ParameterId::kappa) return is_vertex_cut(g, r.witness());
    const auto def = definition(pid);
    return qualifies(g, r.witness(), def.property, def.mode);
}

} // namespace splitdom::testing
