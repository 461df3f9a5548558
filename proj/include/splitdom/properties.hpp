#pragma once

#include <array>
#include <string>

#include "graph.hpp"

namespace splitdom {

enum class Base { Dominating, Independent, Irredundant };
enum class Flavor { Plain, Split, Nonsplit };

/// One cell of the base-property x complement-condition grid.
struct PropertyId {
    Base base = Base::Dominating;
    Flavor flavor = Flavor::Plain;

    friend constexpr bool operator==(PropertyId, PropertyId) = default;
};

inline constexpr std::array<PropertyId, 9> kAllProperties = {{
    {Base::Dominating, Flavor::Plain},  {Base::Dominating, Flavor::Split},  {Base::Dominating, Flavor::Nonsplit},
    {Base::Independent, Flavor::Plain}, {Base::Independent, Flavor::Split}, {Base::Independent, Flavor::Nonsplit},
    {Base::Irredundant, Flavor::Plain}, {Base::Irredundant, Flavor::Split}, {Base::Irredundant, Flavor::Nonsplit},
}};

inline std::string to_string(PropertyId p) {
    static constexpr const char* bases[] = {"Dominating", "Independent", "Irredundant"};
    static constexpr const char* flavors[] = {"Plain", "Split", "Nonsplit"};
    return std::string(bases[int(p.base)]) + "/" + flavors[int(p.flavor)];
}

enum class ExtremalMode { Any, OneMinimal, OneMaximal, SubsetMinimal, SupersetMaximal };

inline const char* to_string(ExtremalMode m) {
    switch (m) {
    case ExtremalMode::Any: return "Any";
    case ExtremalMode::OneMinimal: return "OneMinimal";
    case ExtremalMode::OneMaximal: return "OneMaximal";
    case ExtremalMode::SubsetMinimal: return "SubsetMinimal";
    case ExtremalMode::SupersetMaximal: return "SupersetMaximal";
    }
    return "?";
}

inline bool is_dominating(const Graph& g, VertexSet s) {
    return closed_neighborhood(g, s) == g.vertices();
}

inline bool is_independent(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

/// pn(v, S) = N[v] \ N[S \ {v}]. May contain v itself.
inline VertexSet private_neighbors(const Graph& g, VertexSet s, Vertex v) {
    if (!s.contains(v))
        throw Error(ErrorCode::VertexNotInSet, "vertex " + std::to_string(v) + " not in " + s.to_string());
    return g.closed_neighbors(v) - closed_neighborhood(g, s.without(v));
}

inline bool is_irredundant(const Graph& g, VertexSet s) {
    // A vertex is private to v iff it is covered exactly once, by v.
    VertexSet once, twice;
    for (Vertex v : s) {
        const VertexSet cover = g.closed_neighbors(v);
        twice |= once & cover;
        once |= cover;
    }
    const VertexSet unique = once - twice;
    for (Vertex v : s)
        if (!g.closed_neighbors(v).intersects(unique)) return false;
    return true;
}

inline bool base_holds(const Graph& g, VertexSet s, Base b) {
    switch (b) {
    case Base::Dominating: return is_dominating(g, s);
    case Base::Independent: return is_independent(g, s);
    case Base::Irredundant: return is_irredundant(g, s);
    }
    return false;
}

/// Split wants a disconnected or K1 remainder, Nonsplit a connected (or K1) one.
/// An empty remainder satisfies neither.
inline bool flavor_holds(ComplementStatus st, Flavor f) {
    switch (f) {
    case Flavor::Plain: return true;
    case Flavor::Split: return st == ComplementStatus::Disconnected || st == ComplementStatus::K1;
    case Flavor::Nonsplit: return st == ComplementStatus::ConnectedMultiple || st == ComplementStatus::K1;
    }
    return false;
}

inline bool satisfies(const Graph& g, VertexSet s, PropertyId p) {
    if (!base_holds(g, s, p.base)) return false;
    return p.flavor == Flavor::Plain || flavor_holds(induced_status(g, s), p.flavor);
}

namespace detail {

inline bool one_minimal(const Graph& g, VertexSet s, PropertyId p) {
    for (Vertex v : s)
        if (satisfies(g, s.without(v), p)) return false;
    return true;
}

inline bool one_maximal(const Graph& g, VertexSet s, PropertyId p) {
    for (Vertex v : s.complement(g.order()))
        if (satisfies(g, s.with(v), p)) return false;
    return true;
}

inline bool subset_minimal(const Graph& g, VertexSet s, PropertyId p) {
    // proper submasks of s, largest first
    const auto full = s.bits();
    if (full == 0) return true;
    for (auto sub = (full - 1) & full;; sub = (sub - 1) & full) {
        if (satisfies(g, VertexSet(sub), p)) return false;
        if (sub == 0) break;
    }
    return true;
}

inline bool superset_maximal(const Graph& g, VertexSet s, PropertyId p) {
    const auto outside = s.complement(g.order()).bits();
    if (outside == 0) return true;
    for (auto add = outside;; add = (add - 1) & outside) {
        if (add == 0) break;
        if (satisfies(g, VertexSet(s.bits() | add), p)) return false;
    }
    return true;
}

} // namespace detail

/// Tests s against an extremality mode for property p. s must satisfy p.
inline bool is_extremal(const Graph& g, VertexSet s, PropertyId p, ExtremalMode m) {
    if (!satisfies(g, s, p))
        throw Error(ErrorCode::PropertyNotSatisfied, s.to_string() + " is not " + to_string(p));
    switch (m) {
    case ExtremalMode::Any: return true;
    case ExtremalMode::OneMinimal: return detail::one_minimal(g, s, p);
    case ExtremalMode::OneMaximal: return detail::one_maximal(g, s, p);
    case ExtremalMode::SubsetMinimal: return detail::subset_minimal(g, s, p);
    case ExtremalMode::SupersetMaximal: return detail::superset_maximal(g, s, p);
    }
    return false;
}

/// satisfies() and is_extremal() in one call, without the precondition.
inline bool qualifies(const Graph& g, VertexSet s, PropertyId p, ExtremalMode m) {
    return satisfies(g, s, p) && is_extremal(g, s, p, m);
}

/// Clause-by-clause readings of the published maximal/minimal set definitions. These are kept
/// only to compare against the property-level readings above; the solvers never use them.
namespace literal {

namespace detail {
inline bool split_status(ComplementStatus st) {
    return st == ComplementStatus::Disconnected || st == ComplementStatus::K1;
}
} // namespace detail

/// S split independent and, for each outside v: S+v not independent, or V-(S+v) not split.
inline bool maximal_split_independent(const Graph& g, VertexSet s) {
    if (!satisfies(g, s, {Base::Independent, Flavor::Split})) return false;
    for (Vertex v : s.complement(g.order())) {
        if (!is_independent(g, s.with(v))) continue;
        if (!detail::split_status(induced_status(g, s.with(v)))) continue;
        return false;
    }
    return true;
}

/// S split irredundant and, for each outside v: v has no private neighbor w.r.t. S+v,
/// or V-(S+v) not split.
inline bool maximal_split_irredundant(const Graph& g, VertexSet s) {
    if (!satisfies(g, s, {Base::Irredundant, Flavor::Split})) return false;
    for (Vertex v : s.complement(g.order())) {
        if (private_neighbors(g, s.with(v), v).empty()) continue;
        if (!detail::split_status(induced_status(g, s.with(v)))) continue;
        return false;
    }
    return true;
}

inline bool maximal_nonsplit_independent(const Graph& g, VertexSet s) {
    if (!satisfies(g, s, {Base::Independent, Flavor::Nonsplit})) return false;
    for (Vertex v : s.complement(g.order())) {
        if (!is_independent(g, s.with(v))) continue;
        if (detail::split_status(induced_status(g, s.with(v)))) continue;
        return false;
    }
    return true;
}

inline bool maximal_nonsplit_irredundant(const Graph& g, VertexSet s) {
    if (!satisfies(g, s, {Base::Irredundant, Flavor::Nonsplit})) return false;
    for (Vertex v : s.complement(g.order())) {
        if (private_neighbors(g, s.with(v), v).empty()) continue;
        if (detail::split_status(induced_status(g, s.with(v)))) continue;
        return false;
    }
    return true;
}

/// Quantifier scope of the minimal split dominating definition.
enum class Scope {
    WholeSet,   // (every v has a private neighbor) or (every v reconnects the remainder)
    PerVertex,  // every v: has a private neighbor or reconnects the remainder
};

inline bool minimal_split_dominating(const Graph& g, VertexSet s, Scope scope) {
    if (!satisfies(g, s, {Base::Dominating, Flavor::Split})) return false;
    const auto has_pn = [&](Vertex v) { return !private_neighbors(g, s, v).empty(); };
    const auto reconnects = [&](Vertex v) {
        return induced_status(g, s.without(v)) == ComplementStatus::ConnectedMultiple;
    };
    if (scope == Scope::PerVertex) {
        for (Vertex v : s)
            if (!has_pn(v) && !reconnects(v)) return false;
        return true;
    }
    bool all_pn = true, all_reconnect = true;
    for (Vertex v : s) {
        all_pn = all_pn && has_pn(v);
        all_reconnect = all_reconnect && reconnects(v);
    }
    return all_pn || all_reconnect;
}

} // namespace literal

} // namespace splitdom
