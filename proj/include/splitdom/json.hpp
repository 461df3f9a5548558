#pragma once

#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lab.hpp"
#include "parameters.hpp"

namespace splitdom {

using Json = nlohmann::ordered_json;

inline constexpr const char* kNoQualifyingSet = "no-qualifying-set";

inline Json to_json(VertexSet s) { return Json(s.to_vector()); }

inline Json to_json(const Side& s) {
    if (std::holds_alternative<std::int64_t>(s)) return Json(std::get<std::int64_t>(s));
    return Json(std::get<std::string>(s));
}

/// {"value": n} or {"value": null, "reason": "no-qualifying-set"}.
inline Json to_json(const ParamResult& r) {
    if (r.defined()) return Json{{"value", r.value()}};
    return Json{{"value", nullptr}, {"reason", kNoQualifyingSet}};
}

/// One JSON Lines record per certificate.
inline Json to_json(const Certificate& c) {
    Json witnesses = Json::object();
    for (auto& [name, set] : c.witnesses) witnesses[name] = to_json(set);
    Json trace = Json::array();
    for (auto& t : c.trace) trace.push_back({{"set", to_json(t.set)}, {"property", t.property}, {"value", t.value}});
    return Json{{"graph6", c.graph6}, {"claim", to_string(c.claim)}, {"detail", c.detail}, {"lhs", to_json(c.lhs)},
                {"rhs", to_json(c.rhs)}, {"witnesses", witnesses}, {"trace", trace}};
}

inline Side side_from_json(const Json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    return j.get<std::string>();
}

inline VertexSet set_from_json(const Json& j) {
    VertexSet s;
    for (const auto& v : j) s = s.with(v.get<int>());
    return s;
}

inline Certificate certificate_from_json(const Json& j) {
    Certificate c;
    c.graph6 = j.at("graph6").get<std::string>();
    const auto claim = parse_claim(j.at("claim").get<std::string>());
    if (!claim) throw std::invalid_argument("unknown claim " + j.at("claim").dump());
    c.claim = *claim;
    c.detail = j.at("detail").get<std::string>();
    c.lhs = side_from_json(j.at("lhs"));
    c.rhs = side_from_json(j.at("rhs"));
    for (auto& [name, set] : j.at("witnesses").items()) c.witnesses.emplace_back(name, set_from_json(set));
    for (auto& t : j.at("trace"))
        c.trace.push_back({set_from_json(t.at("set")), t.at("property").get<std::string>(), t.at("value").get<bool>()});
    return c;
}

inline Json to_json(const ScanReport& r, bool include_timing = false) {
    Json tallies = Json::object();
    for (ClaimId c : r.claims) {
        const auto& t = r.tallies.at(c);
        tallies[to_string(c)] = {{"pass", t.pass}, {"fail", t.fail}, {"skip", t.skip}};
    }
    Json malformed = Json::array();
    for (auto& [line, why] : r.malformed) malformed.push_back({{"line", line}, {"error", why}});
    Json certs = Json::array();
    for (auto& c : r.certificates) {
        Json j = to_json(c.certificate);
        j["line"] = c.line;
        certs.push_back(std::move(j));
    }
    Json observations = Json::array();
    for (auto& o : r.observations) {
        Json j{{"name", o.name}, {"examined", o.examined}, {"divergent", o.divergent}};
        if (o.first_graph6) j["example"] = {{"graph6", *o.first_graph6}, {"set", to_json(o.first_set)}};
        observations.push_back(std::move(j));
    }
    Json out{{"lines", r.lines},
             {"scanned", r.scanned},
             {"skipped_disconnected", r.disconnected},
             {"malformed", malformed},
             {"claims", tallies},
             {"violations", r.certificates.size()},
             {"certificates", certs},
             {"observations", observations}};
    if (include_timing) out["runtime"] = {{"seconds", r.seconds}, {"workers", r.workers}};
    return out;
}

inline Json to_json(const RelationTable& rel) {
    Json rows = Json::array();
    for (ParameterId a : kAllParameters)
        for (ParameterId b : kAllParameters) {
            if (a == b) continue;
            const auto& c = rel.at(a, b);
            rows.push_back({{"a", name(a)}, {"b", name(b)}, {"less", c.less}, {"equal", c.equal},
                            {"greater", c.greater}, {"undefined", c.undefined}});
        }
    return Json{{"graphs", rel.graphs}, {"relations", rows}};
}

} // namespace splitdom
