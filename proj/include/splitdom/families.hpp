#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_io.hpp"
#include "parameters.hpp"
#include "solvers.hpp"

namespace splitdom {

enum class FamilyKind { Path, Cycle, Wheel, Complete, CompleteBipartite, TwoTree };

inline const char* to_string(FamilyKind k) {
    switch (k) {
    case FamilyKind::Path: return "path";
    case FamilyKind::Cycle: return "cycle";
    case FamilyKind::Wheel: return "wheel";
    case FamilyKind::Complete: return "complete";
    case FamilyKind::CompleteBipartite: return "bipartite";
    case FamilyKind::TwoTree: return "2tree";
    }
    return "?";
}

inline std::optional<FamilyKind> parse_family_kind(std::string_view s) {
    for (FamilyKind k : {FamilyKind::Path, FamilyKind::Cycle, FamilyKind::Wheel, FamilyKind::Complete,
                         FamilyKind::CompleteBipartite, FamilyKind::TwoTree})
        if (s == to_string(k)) return k;
    return std::nullopt;
}

/// n is the path/cycle length, the rim length of a wheel, or the larger side of K_{m,n}.
struct FamilySpec {
    FamilyKind kind = FamilyKind::Path;
    int n = 2;
    int m = 0;
    std::uint64_t seed = 0;
};

/// Smallest legal n for each kind.
inline int min_size(FamilyKind k) {
    switch (k) {
    case FamilyKind::Path: return 2;
    case FamilyKind::Cycle: return 3;
    case FamilyKind::Wheel: return 3;
    case FamilyKind::Complete: return 2;
    case FamilyKind::CompleteBipartite: return 1;
    case FamilyKind::TwoTree: return 3;
    }
    return 1;
}

inline std::string label(const FamilySpec& spec) {
    switch (spec.kind) {
    case FamilyKind::Path: return "P" + std::to_string(spec.n);
    case FamilyKind::Cycle: return "C" + std::to_string(spec.n);
    case FamilyKind::Wheel: return "W" + std::to_string(spec.n);
    case FamilyKind::Complete: return "K" + std::to_string(spec.n);
    case FamilyKind::CompleteBipartite: return "K" + std::to_string(spec.m) + "," + std::to_string(spec.n);
    case FamilyKind::TwoTree: return "T" + std::to_string(spec.n) + "#" + std::to_string(spec.seed);
    }
    return "?";
}

inline void validate(const FamilySpec& spec) {
    const auto fail = [&](const std::string& why) { throw Error(ErrorCode::SpecOutOfRange, label(spec) + ": " + why); };
    if (spec.n < min_size(spec.kind)) fail("n below " + std::to_string(min_size(spec.kind)));
    const int order = spec.kind == FamilyKind::Wheel               ? spec.n + 1
                      : spec.kind == FamilyKind::CompleteBipartite ? spec.m + spec.n
                                                                   : spec.n;
    if (order > kMaxVertices) fail("more than 32 vertices");
    if (spec.kind == FamilyKind::CompleteBipartite && (spec.m < 1 || spec.m > spec.n)) fail("need 1 <= m <= n");
}

/// Vertex numbering: paths and cycles along the walk, wheel hub 0 with rim 1..n,
/// bipartite sides 0..m-1 and m..m+n-1.
inline Graph generate(const FamilySpec& spec) {
    validate(spec);
    const int n = spec.n;
    Graph g;
    switch (spec.kind) {
    case FamilyKind::Path:
        g = Graph(n);
        for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
        break;
    case FamilyKind::Cycle:
        g = Graph(n);
        for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
        break;
    case FamilyKind::Wheel:
        g = Graph(n + 1);
        for (Vertex v = 1; v <= n; ++v) {
            g.add_edge(0, v);
            g.add_edge(v, v % n + 1);
        }
        break;
    case FamilyKind::Complete:
        g = Graph(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
        break;
    case FamilyKind::CompleteBipartite:
        g = Graph(spec.m + n);
        for (Vertex u = 0; u < spec.m; ++u)
            for (Vertex v = spec.m; v < spec.m + n; ++v) g.add_edge(u, v);
        break;
    case FamilyKind::TwoTree: {
        g = Graph(n);
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        std::mt19937_64 rng(spec.seed);
        for (Vertex v = 3; v < n; ++v) {
            const auto edges = g.edges();
            std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
            auto [a, b] = edges[pick(rng)];
            g.add_edge(v, a);
            g.add_edge(v, b);
        }
        break;
    }
    }
    g.set_id(label(spec));
    return g;
}

/// Every labeled 2-tree reachable by growing K_3 on {0,1,2}, attaching vertex k to both ends of
/// an existing edge. Labeled duplicates are dropped; order follows the attachment choices.
inline std::vector<Graph> enumerate_two_trees(int n) {
    if (n < 3 || n > 8) throw Error(ErrorCode::SpecOutOfRange, "2-tree enumeration needs 3 <= n <= 8");
    std::vector<Graph> out;
    std::set<std::string> seen;
    Graph base(n);
    base.add_edge(0, 1);
    base.add_edge(1, 2);
    base.add_edge(0, 2);

    std::function<void(Graph&, Vertex)> grow = [&](Graph& g, Vertex next) {
        if (next == n) {
            if (seen.insert(to_graph6(g)).second) {
                out.push_back(g);
                out.back().set_id("T" + std::to_string(n) + "#" + std::to_string(out.size() - 1));
            }
            return;
        }
        for (auto [a, b] : g.edges()) {
            if (a >= next || b >= next) continue;
            Graph h = g;
            h.add_edge(next, a);
            h.add_edge(next, b);
            grow(h, next + 1);
        }
    };
    grow(base, 3);
    return out;
}

/// Recognizes 2-trees by peeling degree-2 vertices whose neighbors are adjacent.
inline bool is_two_tree(const Graph& g) {
    const int n = g.order();
    if (n < 3 || g.edge_count() != 2 * n - 3) return false;
    VertexSet alive = g.vertices();
    while (alive.size() > 3) {
        bool peeled = false;
        for (Vertex v : alive) {
            const VertexSet nb = g.neighbors(v) & alive;
            if (nb.size() != 2) continue;
            const Vertex a = nb.front(), b = nb.without(a).front();
            if (!g.has_edge(a, b)) continue;
            alive = alive.without(v);
            peeled = true;
            break;
        }
        if (!peeled) return false;
    }
    for (Vertex v : alive)
        if ((g.neighbors(v) & alive).size() != 2) return false;
    return true;
}

// ---------------------------------------------------------------------------------------------
// Closed-form values

/// The sizes for which a formula has been confirmed by brute force over the scanned box.
/// Valid iff n >= from_n and m >= min_m; from_n empty means no confirmed size.
struct Validity {
    std::optional<int> from_n;
    int min_m = 0;

    bool covers(int m, int n) const { return from_n && n >= *from_n && m >= min_m; }
    friend bool operator==(const Validity&, const Validity&) = default;
};

/// A published closed form for one parameter of one family.
struct Formula {
    FamilyKind kind;
    ParameterId pid;
    std::string expression;
    std::string source;
    int min_m = 0;  // bipartite formulas stated only for m >= min_m
    std::function<std::optional<int>(int m, int n)> evaluate;
    Validity pinned;  // regression fixture, re-derived by determine_validity in the tests
};

struct ExpectedValue {
    ParameterId pid;
    std::optional<int> value;  // nullopt: the parameter is claimed Undefined
    std::string expression;
    std::string source;
    Validity validity;
    bool in_range = false;
};

namespace detail {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

/// Upper parameter of the rim cycle, used by the wheel formulas.
inline std::optional<int> on_rim(int rim, ParameterId pid) {
    return compute_parameter(generate({FamilyKind::Cycle, rim}), pid).value_opt();
}

inline std::vector<Formula> build_formulas() {
    using P = ParameterId;
    using K = FamilyKind;
    std::vector<Formula> f;
    const auto add = [&](K kind, P pid, std::string expr, std::string source, int min_m,
                         std::function<std::optional<int>(int, int)> eval, Validity pinned) {
        f.push_back({kind, pid, std::move(expr), std::move(source), min_m, std::move(eval), pinned});
    };
    const auto undefined = [](int, int) -> std::optional<int> { return std::nullopt; };
    const auto third = [](int, int n) -> std::optional<int> { return ceil_div(n, 3); };
    const auto half_up = [](int, int n) -> std::optional<int> { return ceil_div(n, 2); };
    const auto half_down = [](int, int n) -> std::optional<int> { return n / 2; };
    const auto minus2 = [](int, int n) -> std::optional<int> { return n - 2; };
    const auto constant = [](int c) { return [c](int, int) -> std::optional<int> { return c; }; };

    const std::string split_path = "split chain example, paths";
    const std::string split_cycle = "split chain example, cycles";
    const std::string split_bip = "split chain example, complete bipartite";
    const std::string ns_path = "nonsplit examples, paths";
    const std::string ns_cycle = "nonsplit examples, cycles";
    const std::string ns_cycle_literal = "nonsplit cycle block, lines labelled P_n";
    const std::string ns_wheel = "nonsplit examples, wheels";
    const std::string ns_bip = "nonsplit examples, complete bipartite";
    const std::string no_split_ind = "no split independent set in complete graphs and wheels";
    const std::string no_split_irr = "no split irredundant set in complete graphs and wheels";

    // Pinned values below were produced by determine_validity over the default scan box.
    for (P pid : {P::ir_s, P::gamma_s, P::i_s}) add(K::Path, pid, "ceil(n/3)", split_path, 0, third, {2, 0});
    for (P pid : {P::beta_s, P::Gamma_s, P::IR_s}) add(K::Path, pid, "ceil(n/2)", split_path, 0, half_up, {2, 0});
    add(K::Path, P::gamma_ns, "n-2", ns_path, 0, minus2, {4, 0});
    add(K::Path, P::Gamma_ns, "n-2", ns_path, 0, minus2, {std::nullopt, 0});
    for (P pid : {P::i_ns, P::beta_ns, P::ir_ns, P::IR_ns}) add(K::Path, pid, "2", ns_path, 0, constant(2), {3, 0});
    for (P pid : {P::i_ns, P::beta_ns}) add(K::Path, pid, "1", ns_cycle_literal, 0, constant(1), {std::nullopt, 0});

    for (P pid : {P::ir_s, P::gamma_s, P::i_s}) add(K::Cycle, pid, "ceil(n/3)", split_cycle, 0, third, {4, 0});
    for (P pid : {P::beta_s, P::Gamma_s, P::IR_s}) add(K::Cycle, pid, "floor(n/2)", split_cycle, 0, half_down, {4, 0});
    for (P pid : {P::gamma_ns, P::Gamma_ns}) add(K::Cycle, pid, "n-2", ns_cycle, 0, minus2, {3, 0});
    for (P pid : {P::i_ns, P::beta_ns}) add(K::Cycle, pid, "1", ns_cycle, 0, constant(1), {3, 0});
    for (P pid : {P::ir_ns, P::IR_ns}) add(K::Cycle, pid, "2", ns_cycle, 0, constant(2), {4, 0});

    for (P pid : {P::gamma_ns, P::i_ns, P::ir_ns}) add(K::Wheel, pid, "1", ns_wheel, 0, constant(1), {3, 0});
    add(K::Wheel, P::Gamma_ns, "Gamma(C_n)", ns_wheel, 0, [](int, int n) { return on_rim(n, P::Gamma); }, {3, 0});
    add(K::Wheel, P::beta_ns, "beta(C_n)", ns_wheel, 0, [](int, int n) { return on_rim(n, P::beta); }, {3, 0});
    add(K::Wheel, P::IR_ns, "IR(C_n)", ns_wheel, 0, [](int, int n) { return on_rim(n, P::IR); }, {3, 0});
    for (P pid : {P::i_s, P::beta_s}) add(K::Wheel, pid, "undefined", no_split_ind, 0, undefined, {3, 0});
    for (P pid : {P::ir_s, P::IR_s}) add(K::Wheel, pid, "undefined", no_split_irr, 0, undefined, {3, 0});

    for (P pid : {P::i_s, P::beta_s}) add(K::Complete, pid, "undefined", no_split_ind, 0, undefined, {3, 0});
    for (P pid : {P::ir_s, P::IR_s}) add(K::Complete, pid, "undefined", no_split_irr, 0, undefined, {3, 0});

    const auto smaller = [](int m, int n) -> std::optional<int> { return std::min(m, n); };
    const auto larger = [](int m, int n) -> std::optional<int> { return std::max(m, n); };
    for (P pid : {P::ir_s, P::gamma_s, P::i_s}) add(K::CompleteBipartite, pid, "min(m,n)", split_bip, 1, smaller, {1, 1});
    for (P pid : {P::beta_s, P::Gamma_s, P::IR_s}) add(K::CompleteBipartite, pid, "max(m,n)", split_bip, 1, larger, {1, 1});
    for (P pid : {P::gamma_ns, P::Gamma_ns, P::ir_ns})
        add(K::CompleteBipartite, pid, "2", ns_bip, 2, constant(2), {2, 2});
    add(K::CompleteBipartite, P::i_ns, "m-1", ns_bip, 2, [](int m, int) -> std::optional<int> { return m - 1; }, {2, 2});
    add(K::CompleteBipartite, P::beta_ns, "n-1", ns_bip, 2, [](int, int n) -> std::optional<int> { return n - 1; }, {2, 2});
    add(K::CompleteBipartite, P::IR_ns, "n-1", ns_bip, 2, [](int, int n) -> std::optional<int> { return n - 1; }, {3, 2});
    return f;
}

} // namespace detail

inline const std::vector<Formula>& formulas() {
    static const std::vector<Formula> all = detail::build_formulas();
    return all;
}

/// Largest size scanned when confirming formulas (largest side for bipartite).
inline int scan_limit(FamilyKind kind) {
    switch (kind) {
    case FamilyKind::Wheel: return 11;
    case FamilyKind::CompleteBipartite: return 6;
    default: return 12;
    }
}

/// Every (m, n) pair in the scan box of a family, smallest first.
inline std::vector<FamilySpec> scan_box(FamilyKind kind) {
    std::vector<FamilySpec> out;
    for (int n = min_size(kind); n <= scan_limit(kind); ++n) {
        if (kind == FamilyKind::CompleteBipartite)
            for (int m = 1; m <= n; ++m) out.push_back({kind, n, m});
        else
            out.push_back({kind, n});
    }
    return out;
}

inline bool formula_matches(const Formula& f, const FamilySpec& spec) {
    return compute_parameter(generate(spec), f.pid).value_opt() == f.evaluate(spec.m, spec.n);
}

/// Brute-forces a formula over its scan box: the smallest n from which it holds for every
/// scanned size at or above n (and every m >= f.min_m).
inline Validity determine_validity(const Formula& f) {
    Validity v{std::nullopt, f.min_m};
    std::optional<int> last_failure;
    for (const FamilySpec& spec : scan_box(f.kind)) {
        if (spec.m < f.min_m) continue;
        if (!formula_matches(f, spec)) last_failure = spec.n;
    }
    const int start = last_failure ? *last_failure + 1 : min_size(f.kind);
    if (start <= scan_limit(f.kind)) v.from_n = std::max(start, f.min_m);
    return v;
}

inline std::vector<ExpectedValue> expected_values(const FamilySpec& spec) {
    validate(spec);
    if (spec.kind == FamilyKind::TwoTree)
        throw Error(ErrorCode::NoFormulaForFamily, "2-trees have no closed-form table");
    std::vector<ExpectedValue> out;
    for (const Formula& f : formulas()) {
        if (f.kind != spec.kind || spec.m < f.min_m) continue;
        out.push_back({f.pid, f.evaluate(spec.m, spec.n), f.expression, f.source, f.pinned,
                       f.pinned.covers(spec.m, spec.n)});
    }
    return out;
}

} // namespace splitdom
