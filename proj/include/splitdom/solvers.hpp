#pragma once

#include <array>
#include <functional>
#include <vector>

#include "graph.hpp"
#include "parameters.hpp"
#include "properties.hpp"

namespace splitdom {

namespace detail {

/// Walks the k-subsets of {0..n-1} in increasing numeric order, building each set from its
/// highest member down so that whole branches can be cut by a sound prune test.
class OrderedSearch {
public:
    OrderedSearch(const Graph& g, PropertyId property) : g_(g), property_(property) {
        VertexSet reach;
        below_[0] = reach;
        for (Vertex v = 0; v < g.order(); ++v) {
            reach |= g.closed_neighbors(v);
            below_[v + 1] = reach;
        }
        max_cover_ = 1;
        for (Vertex v = 0; v < g.order(); ++v) max_cover_ = std::max(max_cover_, g.degree(v) + 1);
    }

    /// Visits k-sets passing the prune in increasing numeric order; stops when visit returns false.
    bool walk(int k, const std::function<bool(VertexSet)>& visit) const {
        return descend(VertexSet{}, k, g_.order(), visit);
    }

private:
    // `hi` bounds the members still to be chosen: all are < hi.
    bool viable(VertexSet chosen, int remaining, int hi) const {
        switch (property_.base) {
        case Base::Dominating: {
            const VertexSet missing = closed_neighborhood(g_, chosen).complement(g_.order());
            if (missing.empty()) return true;
            if (remaining == 0) return false;
            if (!missing.is_subset_of(below_[hi])) return false;
            return missing.size() <= remaining * max_cover_;
        }
        case Base::Independent: return is_independent(g_, chosen);
        case Base::Irredundant: return is_irredundant(g_, chosen);
        }
        return true;
    }

    bool descend(VertexSet chosen, int remaining, int hi, const std::function<bool(VertexSet)>& visit) const {
        if (!viable(chosen, remaining, hi)) return true;
        if (remaining == 0) return visit(chosen);
        for (Vertex top = remaining - 1; top < hi; ++top)
            if (!descend(chosen.with(top), remaining - 1, top, visit)) return false;
        return true;
    }

    const Graph& g_;
    PropertyId property_;
    std::array<VertexSet, kMaxVertices + 1> below_{};
    int max_cover_ = 1;
};

inline void require_connected(const Graph& g) {
    if (!is_connected(g)) throw Error(ErrorCode::DisconnectedInput, "graph " + g.id() + " is disconnected");
}

} // namespace detail

/// Every set with property p that is m-extremal, by ascending cardinality then numeric order.
inline std::vector<VertexSet> enumerate_sets(const Graph& g, PropertyId p, ExtremalMode m) {
    std::vector<VertexSet> out;
    const detail::OrderedSearch search(g, p);
    for (int k = 0; k <= g.order(); ++k) {
        search.walk(k, [&](VertexSet s) {
            if (qualifies(g, s, p, m)) out.push_back(s);
            return true;
        });
    }
    return out;
}

/// Exact value of one parameter with a witness. The witness is the numerically least set among
/// those of optimal size.
///
/// Minimum-type parameters take the first qualifying set of an ascending-size walk. Maximum-type
/// parameters walk sizes downward. For beta*/IR* the largest set with the property cannot have a
/// qualifying one-vertex extension, so it is 1-maximal without checking.
inline ParamResult compute_parameter(const Graph& g, ParameterId pid) {
    detail::require_connected(g);
    if (pid == ParameterId::kappa) {
        auto [k, cut] = vertex_connectivity(g);
        return ParamResult::of(k, cut);
    }
    const ParameterDefinition def = definition(pid);
    const detail::OrderedSearch search(g, def.property);
    const int n = g.order();
    const bool max_implies_extremal =
        def.aggregate == Aggregate::Max && def.mode == ExtremalMode::OneMaximal;

    std::optional<VertexSet> hit;
    const auto try_size = [&](int k) {
        search.walk(k, [&](VertexSet s) {
            if (!satisfies(g, s, def.property)) return true;
            if (!max_implies_extremal && !is_extremal(g, s, def.property, def.mode)) return true;
            hit = s;
            return false;
        });
        return hit.has_value();
    };

    if (def.aggregate == Aggregate::Min) {
        for (int k = 0; k <= n; ++k)
            if (try_size(k)) return ParamResult::of(*hit);
    } else {
        for (int k = n; k >= 0; --k)
            if (try_size(k)) return ParamResult::of(*hit);
    }
    return ParamResult::undefined();
}

inline ParameterTable compute_table(const Graph& g) {
    detail::require_connected(g);
    ParameterTable table;
    table.stats = stats(g);
    for (ParameterId pid : kAllParameters) {
        if (pid == ParameterId::kappa)
            table[pid] = ParamResult::of(table.stats.kappa, table.stats.kappa_witness);
        else
            table[pid] = compute_parameter(g, pid);
    }
    return table;
}

} // namespace splitdom
