#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"
#include "properties.hpp"

namespace splitdom {

/// The eighteen set parameters (six kinds x three flavors) plus vertex connectivity.
enum class ParameterId {
    ir, gamma, i, beta, Gamma, IR,
    ir_s, gamma_s, i_s, beta_s, Gamma_s, IR_s,
    ir_ns, gamma_ns, i_ns, beta_ns, Gamma_ns, IR_ns,
    kappa,
};

inline constexpr int kParameterCount = 19;

inline constexpr std::array<ParameterId, kParameterCount> kAllParameters = {
    ParameterId::ir,       ParameterId::gamma,    ParameterId::i,     ParameterId::beta,    ParameterId::Gamma,
    ParameterId::IR,       ParameterId::ir_s,     ParameterId::gamma_s, ParameterId::i_s,   ParameterId::beta_s,
    ParameterId::Gamma_s,  ParameterId::IR_s,     ParameterId::ir_ns, ParameterId::gamma_ns, ParameterId::i_ns,
    ParameterId::beta_ns,  ParameterId::Gamma_ns, ParameterId::IR_ns, ParameterId::kappa,
};

enum class Aggregate { Min, Max };

/// How a set parameter is defined: aggregate |S| over sets with `property` that are `mode`-extremal.
struct ParameterDefinition {
    PropertyId property;
    ExtremalMode mode;
    Aggregate aggregate;
};

constexpr Flavor flavor_of(ParameterId pid) {
    const int k = static_cast<int>(pid);
    return k < 6 ? Flavor::Plain : k < 12 ? Flavor::Split : Flavor::Nonsplit;
}

/// Not valid for kappa.
constexpr ParameterDefinition definition(ParameterId pid) {
    const Flavor f = flavor_of(pid);
    switch (static_cast<int>(pid) % 6) {
    case 0: return {{Base::Irredundant, f}, ExtremalMode::OneMaximal, Aggregate::Min};
    case 1: return {{Base::Dominating, f}, ExtremalMode::Any, Aggregate::Min};
    case 2: return {{Base::Independent, f}, ExtremalMode::OneMaximal, Aggregate::Min};
    case 3: return {{Base::Independent, f}, ExtremalMode::OneMaximal, Aggregate::Max};
    case 4: return {{Base::Dominating, f}, ExtremalMode::OneMinimal, Aggregate::Max};
    default: return {{Base::Irredundant, f}, ExtremalMode::OneMaximal, Aggregate::Max};
    }
}

/// Machine-format names. Upper parameters carry a "_u" so no two names differ only by case.
constexpr std::string_view name(ParameterId pid) {
    constexpr std::array<std::string_view, kParameterCount> names = {
        "ir",    "gamma",    "i",    "beta",    "Gamma_u",    "IR_u",
        "ir_s",  "gamma_s",  "i_s",  "beta_s",  "Gamma_u_s",  "IR_u_s",
        "ir_ns", "gamma_ns", "i_ns", "beta_ns", "Gamma_u_ns", "IR_u_ns",
        "kappa",
    };
    return names[static_cast<int>(pid)];
}

/// Human-readable label with Greek letters.
constexpr std::string_view pretty_name(ParameterId pid) {
    constexpr std::array<std::string_view, kParameterCount> names = {
        "ir",    "γ",    "i",    "β",    "Γ",    "IR",
        "ir_s",  "γ_s",  "i_s",  "β_s",  "Γ_s",  "IR_s",
        "ir_ns", "γ_ns", "i_ns", "β_ns", "Γ_ns", "IR_ns",
        "κ",
    };
    return names[static_cast<int>(pid)];
}

inline std::optional<ParameterId> parse_parameter(std::string_view text) {
    for (ParameterId pid : kAllParameters)
        if (name(pid) == text) return pid;
    // accept the bare upper names too
    constexpr std::array<std::pair<std::string_view, ParameterId>, 6> aliases = {{
        {"Gamma", ParameterId::Gamma},     {"IR", ParameterId::IR},       {"Gamma_s", ParameterId::Gamma_s},
        {"IR_s", ParameterId::IR_s},       {"Gamma_ns", ParameterId::Gamma_ns}, {"IR_ns", ParameterId::IR_ns},
    }};
    for (auto [alias, pid] : aliases)
        if (alias == text) return pid;
    return std::nullopt;
}

/// Either a value with an attaining set, or Undefined when no qualifying set exists.
class ParamResult {
public:
    ParamResult() = default;
    static ParamResult undefined() { return {}; }
    static ParamResult of(VertexSet witness) { return ParamResult(witness.size(), witness); }
    static ParamResult of(int value, VertexSet witness) { return ParamResult(value, witness); }

    bool defined() const { return value_ >= 0; }
    int value() const { return value_; }
    std::optional<int> value_opt() const { return defined() ? std::optional<int>(value_) : std::nullopt; }
    VertexSet witness() const { return witness_; }

    friend bool operator==(const ParamResult&, const ParamResult&) = default;

private:
    ParamResult(int value, VertexSet witness) : value_(value), witness_(witness) {}
    int value_ = -1;  // -1: no qualifying set
    VertexSet witness_;
};

inline std::string to_string(const ParamResult& r) {
    return r.defined() ? std::to_string(r.value()) : std::string("undefined");
}

struct ParameterTable {
    std::array<ParamResult, kParameterCount> results{};
    GraphStats stats;

    const ParamResult& operator[](ParameterId pid) const { return results[static_cast<int>(pid)]; }
    ParamResult& operator[](ParameterId pid) { return results[static_cast<int>(pid)]; }
};

} // namespace splitdom
