#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "parameters.hpp"
#include "properties.hpp"
#include "solvers.hpp"

namespace splitdom {

enum class ClaimId {
    C1,  // classical chain ir <= gamma <= i <= beta <= Gamma <= IR
    C2,  // split chain, when all six split parameters exist
    B1,  // gamma <= gamma_s
    B2,  // kappa <= gamma_s
    B3,  // gamma_s * (Delta + 1) <= n * Delta
    B4,  // diam = 2  =>  gamma_s <= delta
    B5,  // gamma + gamma_s <= n
    B6,  // kappa <= ir_s, gamma_s, i_s
    L1,  // 1-maximal split independent  =>  1-minimal split dominating
    L2,  // 1-minimal split dominating  =>  1-maximal split irredundant
    P1,  // 2-trees have no split independent set
    H1,  // Independent/Plain: 1-maximal <=> maximal
    H2,  // Dominating/Plain: 1-minimal <=> minimal
    FamilyFormula,  // closed form for a named family (not part of corpus scans)
};

inline constexpr std::array<ClaimId, 13> kCorpusClaims = {
    ClaimId::C1, ClaimId::C2, ClaimId::B1, ClaimId::B2, ClaimId::B3, ClaimId::B4, ClaimId::B5,
    ClaimId::B6, ClaimId::L1, ClaimId::L2, ClaimId::P1, ClaimId::H1, ClaimId::H2,
};

inline const char* to_string(ClaimId c) {
    constexpr const char* names[] = {"C1", "C2", "B1", "B2", "B3", "B4", "B5",
                                     "B6", "L1", "L2", "P1", "H1", "H2", "F1"};
    return names[static_cast<int>(c)];
}

inline std::optional<ClaimId> parse_claim(std::string_view s) {
    for (int k = 0; k <= static_cast<int>(ClaimId::FamilyFormula); ++k)
        if (s == to_string(static_cast<ClaimId>(k))) return static_cast<ClaimId>(k);
    return std::nullopt;
}

/// Claims that are established theorems: a violation means a bug here, not a finding.
inline bool is_theorem(ClaimId c) { return c == ClaimId::C1 || c == ClaimId::H1 || c == ClaimId::H2; }

/// Largest order for which claims quantifying over every subset are evaluated.
inline constexpr int kSubsetProbeLimit = 7;

using Side = std::variant<std::int64_t, std::string>;

inline std::string to_string(const Side& s) {
    return std::holds_alternative<std::int64_t>(s) ? std::to_string(std::get<std::int64_t>(s))
                                                   : std::get<std::string>(s);
}

inline Side side_of(const ParamResult& r) {
    return r.defined() ? Side{std::int64_t{r.value()}} : Side{std::string("undefined")};
}

struct TraceEntry {
    VertexSet set;
    std::string property;
    bool value = false;
    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// A violated claim, with enough evidence to re-check it by hand.
struct Certificate {
    std::string graph6;
    ClaimId claim = ClaimId::C1;
    std::string detail;
    Side lhs;
    Side rhs;
    std::vector<std::pair<std::string, VertexSet>> witnesses;
    std::vector<TraceEntry> trace;
    friend bool operator==(const Certificate&, const Certificate&) = default;
};

enum class ClaimStatus { Pass, Fail, Skip };

struct ClaimOutcome {
    ClaimId claim;
    ClaimStatus status = ClaimStatus::Pass;
    std::optional<Certificate> certificate{};
};

/// u1..u3 = 0..2, v1..v4 = 3..6, w1 = 7, w2 = 8.
inline Graph figure1_graph() {
    Graph g = from_edge_list(9, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {3, 7}, {4, 7}, {1, 5}, {2, 6}, {5, 8}, {6, 8}});
    g.set_id("figure1");
    return g;
}

namespace detail {

inline std::string describe(PropertyId p, ExtremalMode m) {
    return to_string(p) + (m == ExtremalMode::Any ? std::string() : std::string(" ") + to_string(m));
}

inline void trace_witness(Certificate& cert, const Graph& g, ParameterId pid, const ParamResult& r) {
    if (!r.defined()) return;
    cert.witnesses.emplace_back(std::string(name(pid)), r.witness());
    if (pid == ParameterId::kappa) {
        cert.trace.push_back({r.witness(), "VertexCut", is_vertex_cut(g, r.witness())});
        return;
    }
    const ParameterDefinition def = definition(pid);
    const bool ok = satisfies(g, r.witness(), def.property);
    cert.trace.push_back({r.witness(), to_string(def.property), ok});
    if (def.mode != ExtremalMode::Any && ok)
        cert.trace.push_back({r.witness(), describe(def.property, def.mode),
                              is_extremal(g, r.witness(), def.property, def.mode)});
}

/// Checks lhs <= rhs for each link. With all_or_nothing any undefined entry skips the claim;
/// otherwise the defined links are tested and the claim is skipped only if none of them fails.
inline ClaimOutcome check_links(const Graph& g, const ParameterTable& t, ClaimId claim,
                                const std::vector<std::pair<ParameterId, ParameterId>>& links,
                                bool all_or_nothing) {
    ClaimOutcome out{claim};
    bool any_undefined = false;
    for (auto [a, b] : links) {
        if (!t[a].defined() || !t[b].defined()) {
            any_undefined = true;
            continue;
        }
        if (t[a].value() <= t[b].value()) continue;
        if (all_or_nothing) continue;  // decided below once definedness is known
        Certificate cert{to_graph6(g), claim,
                         std::string(name(a)) + " <= " + std::string(name(b)),
                         side_of(t[a]), side_of(t[b]), {}, {}};
        trace_witness(cert, g, a, t[a]);
        trace_witness(cert, g, b, t[b]);
        out.status = ClaimStatus::Fail;
        out.certificate = std::move(cert);
        return out;
    }
    if (any_undefined) {
        out.status = ClaimStatus::Skip;
        return out;
    }
    if (all_or_nothing) return check_links(g, t, claim, links, false);
    return out;
}

inline std::vector<std::pair<ParameterId, ParameterId>> chain(Flavor f) {
    const int base = f == Flavor::Plain ? 0 : f == Flavor::Split ? 6 : 12;
    std::vector<std::pair<ParameterId, ParameterId>> links;
    for (int k = 0; k < 5; ++k)
        links.emplace_back(static_cast<ParameterId>(base + k), static_cast<ParameterId>(base + k + 1));
    return links;
}

inline Certificate bound_certificate(const Graph& g, ClaimId claim, std::string detail, std::int64_t lhs,
                                     std::int64_t rhs, const ParameterTable& t,
                                     std::initializer_list<ParameterId> used) {
    Certificate cert{to_graph6(g), claim, std::move(detail), lhs, rhs, {}, {}};
    for (ParameterId pid : used) trace_witness(cert, g, pid, t[pid]);
    return cert;
}

inline ClaimOutcome check_bound(ClaimId claim, bool holds, const std::function<Certificate()>& make) {
    ClaimOutcome out{claim};
    if (!holds) {
        out.status = ClaimStatus::Fail;
        out.certificate = make();
    }
    return out;
}

/// Every satisfying set of p, with `one` and `full` extremality (Maximal: 1-maximal vs no
/// satisfying proper superset; Minimal: 1-minimal vs no satisfying proper subset).
struct SubsetLattice {
    std::vector<bool> sat, one_max, full_max, one_min, full_min;

    SubsetLattice(const Graph& g, PropertyId p) {
        const int n = g.order();
        const std::size_t count = std::size_t{1} << n;
        sat.assign(count, false);
        one_max.assign(count, true);
        one_min.assign(count, true);
        for (std::size_t s = 0; s < count; ++s) sat[s] = satisfies(g, VertexSet(static_cast<VertexSet::Bits>(s)), p);
        // above[s]: some proper superset satisfies; below[s]: some proper subset satisfies
        std::vector<bool> above(count, false), below(count, false);
        for (std::size_t s = count; s-- > 0;)
            for (int v = 0; v < n; ++v) {
                const std::size_t bit = std::size_t{1} << v;
                if (s & bit) continue;
                if (sat[s | bit]) one_max[s] = false;
                if (sat[s | bit] || above[s | bit]) above[s] = true;
            }
        for (std::size_t s = 0; s < count; ++s)
            for (int v = 0; v < n; ++v) {
                const std::size_t bit = std::size_t{1} << v;
                if (!(s & bit)) continue;
                if (sat[s & ~bit]) one_min[s] = false;
                if (sat[s & ~bit] || below[s & ~bit]) below[s] = true;
            }
        full_max.resize(count);
        full_min.resize(count);
        for (std::size_t s = 0; s < count; ++s) {
            full_max[s] = !above[s];
            full_min[s] = !below[s];
        }
    }
};

} // namespace detail

enum class Direction { Maximal, Minimal };

/// Satisfying sets of p whose 1-step extremality disagrees with full extremality.
/// Empty for hereditary (Maximal) and superhereditary (Minimal) properties.
inline std::vector<VertexSet> heredity_divergences(const Graph& g, PropertyId p, Direction d) {
    const detail::SubsetLattice lat(g, p);
    std::vector<VertexSet> out;
    for (std::size_t s = 0; s < lat.sat.size(); ++s) {
        if (!lat.sat[s]) continue;
        const bool differs = d == Direction::Maximal ? lat.one_max[s] != lat.full_max[s]
                                                     : lat.one_min[s] != lat.full_min[s];
        if (differs) out.push_back(VertexSet(static_cast<VertexSet::Bits>(s)));
    }
    return out;
}

namespace detail {

inline ClaimOutcome check_heredity(const Graph& g, ClaimId claim) {
    ClaimOutcome out{claim};
    if (g.order() > kSubsetProbeLimit) {
        out.status = ClaimStatus::Skip;
        return out;
    }
    const bool maximal = claim == ClaimId::H1;
    const PropertyId p = maximal ? PropertyId{Base::Independent, Flavor::Plain}
                                 : PropertyId{Base::Dominating, Flavor::Plain};
    const auto bad = heredity_divergences(g, p, maximal ? Direction::Maximal : Direction::Minimal);
    if (bad.empty()) return out;
    const VertexSet s = bad.front();
    const ExtremalMode one = maximal ? ExtremalMode::OneMaximal : ExtremalMode::OneMinimal;
    const ExtremalMode full = maximal ? ExtremalMode::SupersetMaximal : ExtremalMode::SubsetMinimal;
    const bool one_value = is_extremal(g, s, p, one);
    const bool full_value = is_extremal(g, s, p, full);
    out.status = ClaimStatus::Fail;
    out.certificate = Certificate{to_graph6(g), claim, to_string(p) + ": " + to_string(one) + " == " + to_string(full),
                                  std::string(one_value ? "true" : "false"), std::string(full_value ? "true" : "false"),
                                  {{"S", s}},
                                  {{s, describe(p, one), one_value}, {s, describe(p, full), full_value}}};
    return out;
}

/// premise sets of `from` (1-extremal) must satisfy `to` and be 1-extremal for it.
inline ClaimOutcome check_implication(const Graph& g, ClaimId claim, PropertyId from, ExtremalMode from_mode,
                                      PropertyId to, ExtremalMode to_mode) {
    ClaimOutcome out{claim};
    for (VertexSet s : enumerate_sets(g, from, from_mode)) {
        const bool has = satisfies(g, s, to);
        const bool extremal = has && is_extremal(g, s, to, to_mode);
        if (extremal) continue;
        Certificate cert{to_graph6(g), claim,
                         describe(from, from_mode) + " => " + describe(to, to_mode),
                         describe(from, from_mode) + " " + s.to_string(),
                         describe(to, to_mode) + ": false",
                         {{"S", s}},
                         {{s, to_string(from), true}, {s, describe(from, from_mode), true}, {s, to_string(to), has}}};
        if (has) {
            cert.trace.push_back({s, describe(to, to_mode), false});
            // name the one-vertex change that survives
            for (Vertex v = 0; v < g.order(); ++v) {
                const VertexSet t = to_mode == ExtremalMode::OneMinimal ? (s.contains(v) ? s.without(v) : s)
                                                                         : (s.contains(v) ? s : s.with(v));
                if (t != s && satisfies(g, t, to)) {
                    cert.witnesses.emplace_back(to_mode == ExtremalMode::OneMinimal ? "S-v" : "S+v", t);
                    cert.trace.push_back({t, to_string(to), true});
                    break;
                }
            }
        }
        out.status = ClaimStatus::Fail;
        out.certificate = std::move(cert);
        return out;
    }
    return out;
}

} // namespace detail

/// Evaluates each requested claim on a connected graph, in the order given.
/// A claim is skipped when its hypothesis does not apply: a referenced parameter is undefined,
/// diam != 2 for B4, the graph is not a 2-tree for P1, or n exceeds the subset-probe limit.
inline std::vector<ClaimOutcome> evaluate_claims(const Graph& g, const std::vector<ClaimId>& claims,
                                                 const ParameterTable& t) {
    using P = ParameterId;
    const int n = g.order();
    const GraphStats& st = t.stats;
    std::vector<ClaimOutcome> out;
    for (ClaimId c : claims) {
        switch (c) {
        case ClaimId::C1: out.push_back(detail::check_links(g, t, c, detail::chain(Flavor::Plain), false)); break;
        case ClaimId::C2: out.push_back(detail::check_links(g, t, c, detail::chain(Flavor::Split), true)); break;
        case ClaimId::B1: out.push_back(detail::check_links(g, t, c, {{P::gamma, P::gamma_s}}, false)); break;
        case ClaimId::B2: out.push_back(detail::check_links(g, t, c, {{P::kappa, P::gamma_s}}, false)); break;
        case ClaimId::B3: {
            if (!t[P::gamma_s].defined()) {
                out.push_back({c, ClaimStatus::Skip});
                break;
            }
            const std::int64_t lhs = std::int64_t{t[P::gamma_s].value()} * (st.max_degree + 1);
            const std::int64_t rhs = std::int64_t{n} * st.max_degree;
            out.push_back(detail::check_bound(c, lhs <= rhs, [&] {
                return detail::bound_certificate(g, c, "gamma_s * (Delta + 1) <= n * Delta", lhs, rhs, t, {P::gamma_s});
            }));
            break;
        }
        case ClaimId::B4: {
            if (st.diameter != 2 || !t[P::gamma_s].defined()) {
                out.push_back({c, ClaimStatus::Skip});
                break;
            }
            const std::int64_t lhs = t[P::gamma_s].value(), rhs = st.min_degree;
            out.push_back(detail::check_bound(c, lhs <= rhs, [&] {
                return detail::bound_certificate(g, c, "diam = 2 => gamma_s <= delta", lhs, rhs, t, {P::gamma_s});
            }));
            break;
        }
        case ClaimId::B5: {
            if (!t[P::gamma_s].defined()) {
                out.push_back({c, ClaimStatus::Skip});
                break;
            }
            const std::int64_t lhs = t[P::gamma].value() + t[P::gamma_s].value(), rhs = n;
            out.push_back(detail::check_bound(c, lhs <= rhs, [&] {
                return detail::bound_certificate(g, c, "gamma + gamma_s <= n", lhs, rhs, t, {P::gamma, P::gamma_s});
            }));
            break;
        }
        case ClaimId::B6:
            out.push_back(detail::check_links(g, t, c, {{P::kappa, P::ir_s}, {P::kappa, P::gamma_s}, {P::kappa, P::i_s}},
                                              false));
            break;
        case ClaimId::L1:
            out.push_back(detail::check_implication(g, c, {Base::Independent, Flavor::Split}, ExtremalMode::OneMaximal,
                                                    {Base::Dominating, Flavor::Split}, ExtremalMode::OneMinimal));
            break;
        case ClaimId::L2: {
            const bool exists = !enumerate_sets(g, {Base::Irredundant, Flavor::Split}, ExtremalMode::Any).empty();
            if (!exists) {
                out.push_back({c, ClaimStatus::Skip});
                break;
            }
            out.push_back(detail::check_implication(g, c, {Base::Dominating, Flavor::Split}, ExtremalMode::OneMinimal,
                                                    {Base::Irredundant, Flavor::Split}, ExtremalMode::OneMaximal));
            break;
        }
        case ClaimId::P1: {
            if (!is_two_tree(g)) {
                out.push_back({c, ClaimStatus::Skip});
                break;
            }
            const auto sets = enumerate_sets(g, {Base::Independent, Flavor::Split}, ExtremalMode::Any);
            ClaimOutcome o{c};
            if (!sets.empty()) {
                o.status = ClaimStatus::Fail;
                o.certificate = Certificate{to_graph6(g), c, "2-tree has no split independent set",
                                            std::int64_t(sets.size()), std::int64_t{0}, {{"S", sets.front()}},
                                            {{sets.front(), "Independent/Split", true}}};
            }
            out.push_back(std::move(o));
            break;
        }
        case ClaimId::H1:
        case ClaimId::H2: out.push_back(detail::check_heredity(g, c)); break;
        case ClaimId::FamilyFormula: out.push_back({c, ClaimStatus::Skip}); break;
        }
    }
    return out;
}

inline std::vector<Certificate> check_graph(const Graph& g, const std::vector<ClaimId>& claims) {
    detail::require_connected(g);
    const ParameterTable t = compute_table(g);
    std::vector<Certificate> out;
    for (auto& o : evaluate_claims(g, claims, t))
        if (o.certificate) out.push_back(std::move(*o.certificate));
    return out;
}

// ---------------------------------------------------------------------------------------------
// Observations: divergences between readings of the definitions. Never certificates.

struct ObservationTally {
    std::string name;
    int examined = 0;
    int divergent = 0;
    std::optional<std::string> first_graph6{};
    VertexSet first_set{};
    friend bool operator==(const ObservationTally&, const ObservationTally&) = default;
};

struct GraphObservation {
    bool examined = false;
    bool divergent = false;
    VertexSet set;
};

inline const std::vector<std::string>& observation_names() {
    static const std::vector<std::string> names = {
        "heredity Dominating/Split OneMinimal vs SubsetMinimal",
        "heredity Independent/Split OneMaximal vs SupersetMaximal",
        "heredity Irredundant/Split OneMaximal vs SupersetMaximal",
        "heredity Dominating/Nonsplit OneMinimal vs SubsetMinimal",
        "heredity Independent/Nonsplit OneMaximal vs SupersetMaximal",
        "heredity Irredundant/Nonsplit OneMaximal vs SupersetMaximal",
        "Gamma_u_s over 1-minimal vs subset-minimal split dominating sets",
        "beta_s over 1-maximal vs all split independent sets",
        "IR_u_s over 1-maximal vs all split irredundant sets",
        "maximal split independent: clause reading vs 1-maximal",
        "maximal split irredundant: clause reading vs 1-maximal",
        "maximal nonsplit independent: clause reading vs 1-maximal",
        "maximal nonsplit irredundant: clause reading vs 1-maximal",
        "minimal split dominating: whole-set clause reading vs 1-minimal",
        "minimal split dominating: per-vertex clause reading vs 1-minimal",
    };
    return names;
}

/// One entry per observation_names(), for graphs within the subset-probe limit.
inline std::vector<GraphObservation> observe_graph(const Graph& g) {
    std::vector<GraphObservation> out(observation_names().size());
    if (g.order() > kSubsetProbeLimit) return out;
    for (auto& o : out) o.examined = true;
    std::size_t k = 0;
    const auto heredity = [&](PropertyId p, Direction d) {
        auto bad = heredity_divergences(g, p, d);
        if (!bad.empty()) out[k] = {true, true, bad.front()};
        ++k;
    };
    heredity({Base::Dominating, Flavor::Split}, Direction::Minimal);
    heredity({Base::Independent, Flavor::Split}, Direction::Maximal);
    heredity({Base::Irredundant, Flavor::Split}, Direction::Maximal);
    heredity({Base::Dominating, Flavor::Nonsplit}, Direction::Minimal);
    heredity({Base::Independent, Flavor::Nonsplit}, Direction::Maximal);
    heredity({Base::Irredundant, Flavor::Nonsplit}, Direction::Maximal);

    // extremal-size comparisons: largest set under two readings
    const auto best = [&](PropertyId p, auto&& keep) {
        std::optional<VertexSet> top;
        const detail::SubsetLattice lat(g, p);
        for (std::size_t s = 0; s < lat.sat.size(); ++s) {
            if (!lat.sat[s] || !keep(lat, s)) continue;
            const VertexSet v(static_cast<VertexSet::Bits>(s));
            if (!top || v.size() > top->size()) top = v;
        }
        return top;
    };
    const auto compare = [&](PropertyId p, auto&& keep_a, auto&& keep_b) {
        auto a = best(p, keep_a), b = best(p, keep_b);
        const auto size = [](const std::optional<VertexSet>& s) { return s ? s->size() : -1; };
        if (size(a) != size(b)) out[k] = {true, true, size(a) > size(b) ? *a : *b};
        ++k;
    };
    using L = detail::SubsetLattice;
    compare({Base::Dominating, Flavor::Split}, [](const L& l, std::size_t s) { return bool(l.one_min[s]); },
            [](const L& l, std::size_t s) { return bool(l.full_min[s]); });
    compare({Base::Independent, Flavor::Split}, [](const L& l, std::size_t s) { return bool(l.one_max[s]); },
            [](const L&, std::size_t) { return true; });
    compare({Base::Irredundant, Flavor::Split}, [](const L& l, std::size_t s) { return bool(l.one_max[s]); },
            [](const L&, std::size_t) { return true; });

    // clause readings against the 1-step readings, set by set
    const auto clause = [&](PropertyId p, ExtremalMode m, auto&& literal_test) {
        for (std::uint32_t s = 0; s < (1u << g.order()); ++s) {
            const VertexSet v(s);
            if (!satisfies(g, v, p)) continue;
            if (is_extremal(g, v, p, m) != literal_test(v)) {
                out[k] = {true, true, v};
                break;
            }
        }
        ++k;
    };
    clause({Base::Independent, Flavor::Split}, ExtremalMode::OneMaximal,
           [&](VertexSet v) { return literal::maximal_split_independent(g, v); });
    clause({Base::Irredundant, Flavor::Split}, ExtremalMode::OneMaximal,
           [&](VertexSet v) { return literal::maximal_split_irredundant(g, v); });
    clause({Base::Independent, Flavor::Nonsplit}, ExtremalMode::OneMaximal,
           [&](VertexSet v) { return literal::maximal_nonsplit_independent(g, v); });
    clause({Base::Irredundant, Flavor::Nonsplit}, ExtremalMode::OneMaximal,
           [&](VertexSet v) { return literal::maximal_nonsplit_irredundant(g, v); });
    clause({Base::Dominating, Flavor::Split}, ExtremalMode::OneMinimal,
           [&](VertexSet v) { return literal::minimal_split_dominating(g, v, literal::Scope::WholeSet); });
    clause({Base::Dominating, Flavor::Split}, ExtremalMode::OneMinimal,
           [&](VertexSet v) { return literal::minimal_split_dominating(g, v, literal::Scope::PerVertex); });
    return out;
}

// ---------------------------------------------------------------------------------------------
// Corpus scans

struct ClaimTally {
    int pass = 0;
    int fail = 0;
    int skip = 0;
    friend bool operator==(const ClaimTally&, const ClaimTally&) = default;
};

struct ScannedCertificate {
    std::size_t line = 0;  // 1-based line of the corpus
    Certificate certificate;
    friend bool operator==(const ScannedCertificate&, const ScannedCertificate&) = default;
};

struct ScanReport {
    std::size_t lines = 0;
    std::size_t scanned = 0;
    std::size_t disconnected = 0;
    std::vector<std::pair<std::size_t, std::string>> malformed;  // line, diagnostic
    std::vector<ClaimId> claims;
    std::map<ClaimId, ClaimTally> tallies;
    std::vector<ScannedCertificate> certificates;  // sorted by (line, claim)
    std::vector<ObservationTally> observations;
    double seconds = 0.0;
    int workers = 1;

    bool all_pass() const { return certificates.empty(); }
    bool theorem_violated() const {
        for (auto& c : certificates)
            if (is_theorem(c.certificate.claim)) return true;
        return false;
    }
};

struct ScanOptions {
    std::vector<ClaimId> claims{kCorpusClaims.begin(), kCorpusClaims.end()};
    int workers = 1;
    bool observations = true;
};

inline std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

namespace detail {

struct LineResult {
    enum class Kind { Blank, Malformed, Disconnected, Scanned } kind = Kind::Blank;
    std::string diagnostic;
    std::vector<ClaimOutcome> outcomes;
    std::vector<GraphObservation> observations;
    std::string graph6;
};

inline LineResult scan_line(const std::string& text, const ScanOptions& opt) {
    LineResult r;
    if (detail::trim(text).empty()) return r;
    Graph g;
    try {
        g = parse_graph6(text);
    } catch (const Error& e) {
        r.kind = LineResult::Kind::Malformed;
        r.diagnostic = e.what();
        return r;
    }
    if (!is_connected(g)) {
        r.kind = LineResult::Kind::Disconnected;
        return r;
    }
    r.kind = LineResult::Kind::Scanned;
    r.graph6 = to_graph6(g);
    r.outcomes = evaluate_claims(g, opt.claims, compute_table(g));
    if (opt.observations) r.observations = observe_graph(g);
    return r;
}

/// Runs fn(i) for i in [0, count) on up to `workers` threads.
template <class Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace detail

/// Evaluates claims over a graph6 corpus. Blank lines are ignored, malformed lines are counted
/// and skipped, disconnected graphs are counted and skipped. Results do not depend on workers.
inline ScanReport scan_corpus(const std::vector<std::string>& lines, const ScanOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    ScanReport report;
    report.lines = lines.size();
    report.claims = opt.claims;
    report.workers = opt.workers;

    std::vector<detail::LineResult> results(lines.size());
    detail::parallel_for(lines.size(), opt.workers, [&](std::size_t i) { results[i] = detail::scan_line(lines[i], opt); });

    for (ClaimId c : opt.claims) report.tallies[c];
    if (opt.observations)
        for (const auto& name : observation_names()) report.observations.push_back({name});

    using Kind = detail::LineResult::Kind;
    for (std::size_t i = 0; i < results.size(); ++i) {
        auto& r = results[i];
        switch (r.kind) {
        case Kind::Blank: continue;
        case Kind::Malformed: report.malformed.emplace_back(i + 1, r.diagnostic); continue;
        case Kind::Disconnected: ++report.disconnected; continue;
        case Kind::Scanned: break;
        }
        ++report.scanned;
        for (auto& o : r.outcomes) {
            auto& tally = report.tallies[o.claim];
            switch (o.status) {
            case ClaimStatus::Pass: ++tally.pass; break;
            case ClaimStatus::Fail: ++tally.fail; break;
            case ClaimStatus::Skip: ++tally.skip; break;
            }
            if (o.certificate) report.certificates.push_back({i + 1, std::move(*o.certificate)});
        }
        for (std::size_t k = 0; k < r.observations.size(); ++k) {
            auto& tally = report.observations[k];
            const auto& o = r.observations[k];
            if (!o.examined) continue;
            ++tally.examined;
            if (!o.divergent) continue;
            if (tally.divergent++ == 0) {
                tally.first_graph6 = r.graph6;
                tally.first_set = o.set;
            }
        }
    }
    std::stable_sort(report.certificates.begin(), report.certificates.end(), [](const auto& a, const auto& b) {
        return std::pair(a.line, a.certificate.claim) < std::pair(b.line, b.certificate.claim);
    });
    if (report.scanned == 0) throw Error(ErrorCode::EmptyCorpus, "no connected graph in corpus");
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

inline ScanReport scan_corpus(std::istream& in, const ScanOptions& opt) { return scan_corpus(read_lines(in), opt); }

// ---------------------------------------------------------------------------------------------
// Pairwise relations between parameters

struct RelationTally {
    int less = 0;
    int equal = 0;
    int greater = 0;
    int undefined = 0;
    friend bool operator==(const RelationTally&, const RelationTally&) = default;
};

struct RelationTable {
    std::size_t graphs = 0;
    std::array<std::array<RelationTally, kParameterCount>, kParameterCount> cells{};

    const RelationTally& at(ParameterId a, ParameterId b) const {
        return cells[static_cast<int>(a)][static_cast<int>(b)];
    }
};

/// For every ordered pair (a, b) of parameters, how often a < b, a = b, a > b, or either is
/// undefined across the connected graphs of the corpus.
inline RelationTable observe_relations(const std::vector<std::string>& lines, int workers = 1) {
    std::vector<std::optional<ParameterTable>> tables(lines.size());
    detail::parallel_for(lines.size(), workers, [&](std::size_t i) {
        if (detail::trim(lines[i]).empty()) return;
        try {
            const Graph g = parse_graph6(lines[i]);
            if (is_connected(g)) tables[i] = compute_table(g);
        } catch (const Error&) {
        }
    });
    RelationTable rel;
    for (const auto& t : tables) {
        if (!t) continue;
        ++rel.graphs;
        for (int a = 0; a < kParameterCount; ++a)
            for (int b = 0; b < kParameterCount; ++b) {
                if (a == b) continue;
                const auto& x = t->results[a];
                const auto& y = t->results[b];
                auto& cell = rel.cells[a][b];
                if (!x.defined() || !y.defined()) ++cell.undefined;
                else if (x.value() < y.value()) ++cell.less;
                else if (x.value() == y.value()) ++cell.equal;
                else ++cell.greater;
            }
    }
    if (rel.graphs == 0) throw Error(ErrorCode::EmptyCorpus, "no connected graph in corpus");
    return rel;
}

// ---------------------------------------------------------------------------------------------
// Family verification

struct FormulaCheck {
    FamilySpec spec;
    ExpectedValue expected;
    ParamResult computed;
    bool match = false;
};

struct FamilyCheck {
    std::vector<FormulaCheck> rows;
    std::vector<Certificate> certificates;  // one per mismatch, in range or not

    bool in_range_failure() const {
        for (auto& r : rows)
            if (r.expected.in_range && !r.match) return true;
        return false;
    }
};

inline FamilyCheck check_family(const FamilySpec& spec) {
    FamilyCheck out;
    const Graph g = generate(spec);
    const auto optional_side = [](std::optional<int> v) {
        return v ? Side{std::int64_t{*v}} : Side{std::string("undefined")};
    };
    for (ExpectedValue& ev : expected_values(spec)) {
        const ParamResult r = compute_parameter(g, ev.pid);
        const bool match = r.value_opt() == ev.value;
        if (!match) {
            Certificate cert{to_graph6(g), ClaimId::FamilyFormula,
                             label(spec) + ": " + std::string(name(ev.pid)) + " = " + ev.expression +
                                 (ev.in_range ? " (inside validity range)" : " (outside validity range)"),
                             side_of(r), optional_side(ev.value), {}, {}};
            detail::trace_witness(cert, g, ev.pid, r);
            out.certificates.push_back(std::move(cert));
        }
        out.rows.push_back({spec, std::move(ev), r, match});
    }
    return out;
}

} // namespace splitdom
