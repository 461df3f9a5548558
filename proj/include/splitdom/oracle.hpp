#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "parameters.hpp"

namespace splitdom::oracle {

/// Unoptimized reference: scans the whole power set with its own adjacency matrix, predicates
/// and connectivity test. Shares only the Graph and result types with the real solvers.
class NaiveEvaluator {
public:
    explicit NaiveEvaluator(const Graph& g) : n_(g.order()), adj_(n_, std::vector<bool>(n_, false)) {
        for (auto [u, v] : g.edges()) adj_[u][v] = adj_[v][u] = true;
    }

    int order() const { return n_; }

    bool in(std::uint64_t s, int v) const { return (s >> v) & 1u; }

    bool dominating(std::uint64_t s) const {
        for (int v = 0; v < n_; ++v) {
            bool covered = in(s, v);
            for (int u = 0; u < n_ && !covered; ++u) covered = in(s, u) && adj_[u][v];
            if (!covered) return false;
        }
        return true;
    }

    bool independent(std::uint64_t s) const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (in(s, u) && in(s, v) && adj_[u][v]) return false;
        return true;
    }

    bool irredundant(std::uint64_t s) const {
        for (int v = 0; v < n_; ++v) {
            if (!in(s, v)) continue;
            bool has_private = false;
            for (int w = 0; w < n_ && !has_private; ++w) {
                if (w != v && !adj_[v][w]) continue;  // w must lie in N[v]
                bool covered_by_other = false;
                for (int u = 0; u < n_ && !covered_by_other; ++u)
                    covered_by_other = u != v && in(s, u) && (u == w || adj_[u][w]);
                has_private = !covered_by_other;
            }
            if (!has_private) return false;
        }
        return true;
    }

    /// Number of vertices outside s and whether they induce a connected graph.
    std::pair<int, bool> remainder(std::uint64_t s) const {
        std::vector<int> rest;
        for (int v = 0; v < n_; ++v)
            if (!in(s, v)) rest.push_back(v);
        if (rest.empty()) return {0, false};
        std::vector<bool> seen(n_, false);
        std::vector<int> stack{rest.front()};
        seen[rest.front()] = true;
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int w = 0; w < n_; ++w) {
                if (adj_[u][w] && !in(s, w) && !seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        return {static_cast<int>(rest.size()), reached == static_cast<int>(rest.size())};
    }

    bool holds(std::uint64_t s, PropertyId p) const {
        bool base = false;
        switch (p.base) {
        case Base::Dominating: base = dominating(s); break;
        case Base::Independent: base = independent(s); break;
        case Base::Irredundant: base = irredundant(s); break;
        }
        if (!base) return false;
        auto [left, connected] = remainder(s);
        switch (p.flavor) {
        case Flavor::Plain: return true;
        case Flavor::Split: return left == 1 || (left >= 2 && !connected);
        case Flavor::Nonsplit: return left == 1 || (left >= 2 && connected);
        }
        return false;
    }

private:
    int n_;
    std::vector<std::vector<bool>> adj_;
};

/// Reference value of one parameter. Restricted to n <= 12.
inline ParamResult oracle_parameter(const Graph& g, ParameterId pid) {
    if (g.order() > 12)
        throw Error(ErrorCode::TooLargeForOracle, "n = " + std::to_string(g.order()) + " exceeds 12");
    const NaiveEvaluator ev(g);
    const int n = ev.order();
    const std::uint64_t count = std::uint64_t{1} << n;

    auto [left, connected] = ev.remainder(0);
    if (left >= 2 && !connected)
        throw Error(ErrorCode::DisconnectedInput, "graph " + g.id() + " is disconnected");

    std::vector<bool> table(count);
    const auto size_of = [](std::uint64_t s) {
        int c = 0;
        for (; s; s >>= 1) c += int(s & 1u);
        return c;
    };

    if (pid == ParameterId::kappa) {
        int best = n;
        std::uint64_t arg = 0;
        for (std::uint64_t s = 0; s < count; ++s) {
            auto [rest, conn] = ev.remainder(s);
            const bool cut = rest == 1 || (rest >= 2 && !conn);
            if (cut && size_of(s) < best) {
                best = size_of(s);
                arg = s;
            }
        }
        return ParamResult::of(best, VertexSet(static_cast<VertexSet::Bits>(arg)));
    }

    const ParameterDefinition def = definition(pid);
    for (std::uint64_t s = 0; s < count; ++s) table[s] = ev.holds(s, def.property);

    const auto extremal = [&](std::uint64_t s) {
        for (int v = 0; v < n; ++v) {
            const std::uint64_t bit = std::uint64_t{1} << v;
            if (def.mode == ExtremalMode::OneMaximal && !(s & bit) && table[s | bit]) return false;
            if (def.mode == ExtremalMode::OneMinimal && (s & bit) && table[s & ~bit]) return false;
        }
        return true;
    };

    bool found = false;
    int best = 0;
    std::uint64_t arg = 0;
    for (std::uint64_t s = 0; s < count; ++s) {
        if (!table[s] || !extremal(s)) continue;
        const int k = size_of(s);
        const bool better = !found || (def.aggregate == Aggregate::Min ? k < best : k > best);
        if (better) {
            found = true;
            best = k;
            arg = s;
        }
    }
    if (!found) return ParamResult::undefined();
    return ParamResult::of(best, VertexSet(static_cast<VertexSet::Bits>(arg)));
}

} // namespace splitdom::oracle
