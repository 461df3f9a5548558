#pragma once

// Subcommand bodies for the splitdom executable. Each takes parsed options and streams and
// returns the process exit code: 0 success/all pass, 1 claim violations, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "splitdom/json.hpp"
#include "splitdom/splitdom.hpp"

namespace splitdom::cli {

enum Exit : int { kOk = 0, kViolations = 1, kInputError = 2 };

struct Range {
    int lo = 0;
    int hi = 0;
};

/// "A..B" or "A".
inline std::optional<Range> parse_range(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int v = std::stoi(text, &used);
            if (used != text.size()) return std::nullopt;
            return Range{v, v};
        }
        const std::string a = text.substr(0, dots), b = text.substr(dots + 2);
        const int lo = std::stoi(a, &used);
        if (used != a.size()) return std::nullopt;
        const int hi = std::stoi(b, &used);
        if (used != b.size() || hi < lo) return std::nullopt;
        return Range{lo, hi};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');)
        if (!item.empty()) out.push_back(item);
    return out;
}

/// Reads a whole input; "-" is standard input.
inline std::optional<std::string> slurp(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream buf;
    if (path == "-") {
        buf << stdin_stream.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) return std::nullopt;
    buf << file.rdbuf();
    return buf.str();
}

inline int default_jobs() {
    if (const char* env = std::getenv("SPLITDOM_JOBS")) {
        try {
            const int j = std::stoi(env);
            if (j >= 1) return j;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// ---------------------------------------------------------------------------------------------
// compute

struct ComputeOptions {
    std::string graph = "-";
    std::string format = "g6";  // g6 | edges
    std::string params = "all";
    bool witnesses = false;
    std::string out = "json";  // json | csv
    bool check = false;        // attach claim violations to each record
};

/// One record per input graph, schema shared by JSON and CSV.
struct OutputRecord {
    std::string id;
    std::string graph6;
    bool connected = true;
    std::vector<std::pair<ParameterId, ParamResult>> values;
    std::vector<Certificate> violations;
};

inline Json to_json(const OutputRecord& r, bool witnesses, bool check) {
    Json j{{"id", r.id}, {"graph6", r.graph6}, {"status", r.connected ? "ok" : "skipped-disconnected"}};
    if (!r.connected) return j;
    Json params = Json::object();
    for (auto& [pid, res] : r.values) params[std::string(name(pid))] = splitdom::to_json(res);
    j["params"] = params;
    if (witnesses) {
        Json w = Json::object();
        for (auto& [pid, res] : r.values)
            if (res.defined()) w[std::string(name(pid))] = splitdom::to_json(res.witness());
        j["witnesses"] = w;
    }
    if (check) {
        Json v = Json::array();
        for (auto& c : r.violations) v.push_back(splitdom::to_json(c));
        j["violations"] = v;
    }
    return j;
}

inline std::string csv_witness(VertexSet s) {
    std::string out;
    for (Vertex v : s) out += (out.empty() ? "" : " ") + std::to_string(v);
    return out;
}

inline std::string csv_header(const std::vector<ParameterId>& pids, bool witnesses, bool check) {
    std::string h = "id,graph6,status";
    for (ParameterId pid : pids) h += "," + std::string(name(pid));
    if (witnesses)
        for (ParameterId pid : pids) h += "," + std::string(name(pid)) + "_witness";
    if (check) h += ",violations";
    return h;
}

inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

inline std::string csv_row(const OutputRecord& r, const std::vector<ParameterId>& pids, bool witnesses, bool check) {
    std::string row = csv_quote(r.id) + "," + csv_quote(r.graph6) + "," + (r.connected ? "ok" : "skipped-disconnected");
    for (auto& [pid, res] : r.values) row += "," + (res.defined() ? std::to_string(res.value()) : std::string("null"));
    if (!r.connected) row += std::string(pids.size(), ',');
    if (witnesses) {
        for (auto& [pid, res] : r.values) row += "," + (res.defined() ? csv_witness(res.witness()) : std::string());
        if (!r.connected) row += std::string(pids.size(), ',');
    }
    if (check) {
        std::string claims;
        for (auto& c : r.violations) claims += (claims.empty() ? "" : " ") + std::string(to_string(c.claim));
        row += "," + claims;
    }
    return row;
}

inline int cmd_compute(const ComputeOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    std::vector<ParameterId> pids;
    if (opt.params == "all") {
        pids.assign(kAllParameters.begin(), kAllParameters.end());
    } else {
        for (const auto& item : split_list(opt.params)) {
            const auto pid = parse_parameter(item);
            if (!pid) {
                err << "error: unknown parameter '" << item << "'\n";
                return kInputError;
            }
            pids.push_back(*pid);
        }
    }
    if (opt.format != "g6" && opt.format != "edges") {
        err << "error: --format must be g6 or edges\n";
        return kInputError;
    }
    if (opt.out != "json" && opt.out != "csv") {
        err << "error: --out must be json or csv\n";
        return kInputError;
    }
    const auto text = slurp(opt.graph, in);
    if (!text) {
        err << "error: cannot read " << opt.graph << "\n";
        return kInputError;
    }

    std::vector<Graph> graphs;
    try {
        if (opt.format == "edges") {
            graphs.push_back(parse_edge_list(*text));
            graphs.back().set_id(opt.graph == "-" ? "stdin" : opt.graph);
        } else {
            std::istringstream lines(*text);
            std::string line;
            for (int k = 1; std::getline(lines, line); ++k) {
                if (detail::trim(line).empty()) continue;
                graphs.push_back(parse_graph6(line));
                graphs.back().set_id("line:" + std::to_string(k));
            }
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    if (graphs.empty()) {
        err << "error: no graph in input\n";
        return kInputError;
    }

    if (opt.out == "csv") out << csv_header(pids, opt.witnesses, opt.check) << "\n";
    for (const Graph& g : graphs) {
        OutputRecord rec{g.id(), to_graph6(g), is_connected(g), {}, {}};
        if (rec.connected) {
            for (ParameterId pid : pids) rec.values.emplace_back(pid, compute_parameter(g, pid));
            if (opt.check) rec.violations = check_graph(g, {kCorpusClaims.begin(), kCorpusClaims.end()});
        }
        if (opt.out == "json")
            out << to_json(rec, opt.witnesses, opt.check).dump() << "\n";
        else
            out << csv_row(rec, pids, opt.witnesses, opt.check) << "\n";
    }
    return kOk;
}

// ---------------------------------------------------------------------------------------------
// scan

struct ScanCommandOptions {
    std::string corpus = "-";
    std::string claims = "all";
    int jobs = 1;
    std::string emit_violations{};  // JSON Lines; empty = do not write
    std::string relations{};        // relation table JSON; empty = do not compute
    bool timing = false;
    bool observations = true;
};

inline std::optional<std::vector<ClaimId>> parse_claims(const std::string& text) {
    if (text == "all") return std::vector<ClaimId>(kCorpusClaims.begin(), kCorpusClaims.end());
    std::vector<ClaimId> out;
    for (const auto& item : split_list(text)) {
        auto c = parse_claim(item);
        if (!c || *c == ClaimId::FamilyFormula) return std::nullopt;
        out.push_back(*c);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

inline int cmd_scan(const ScanCommandOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
    const auto claims = parse_claims(opt.claims);
    if (!claims) {
        err << "error: bad --claims list '" << opt.claims << "'\n";
        return kInputError;
    }
    if (opt.jobs < 1) {
        err << "error: --jobs must be positive\n";
        return kInputError;
    }
    const auto text = slurp(opt.corpus, in);
    if (!text) {
        err << "error: cannot read " << opt.corpus << "\n";
        return kInputError;
    }
    std::istringstream stream(*text);
    const auto lines = read_lines(stream);

    ScanReport report;
    try {
        report = scan_corpus(lines, {*claims, opt.jobs, opt.observations});
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    for (auto& [line, why] : report.malformed) err << "warning: line " << line << ": " << why << "\n";
    if (report.disconnected > 0)
        err << "warning: skipped " << report.disconnected << " disconnected graph(s)\n";

    if (!opt.emit_violations.empty()) {
        std::ofstream file(opt.emit_violations);
        if (!file) {
            err << "error: cannot write " << opt.emit_violations << "\n";
            return kInputError;
        }
        for (auto& c : report.certificates) file << splitdom::to_json(c.certificate).dump() << "\n";
    }
    if (!opt.relations.empty()) {
        std::ofstream file(opt.relations);
        if (!file) {
            err << "error: cannot write " << opt.relations << "\n";
            return kInputError;
        }
        file << splitdom::to_json(observe_relations(lines, opt.jobs)).dump(2) << "\n";
    }
    out << splitdom::to_json(report, opt.timing).dump(2) << "\n";
    return report.all_pass() ? kOk : kViolations;
}

// ---------------------------------------------------------------------------------------------
// family / gen

struct FamilyOptions {
    std::string kind{};
    std::string n{};
    std::string m{};
    bool verify = false;
    std::string emit_violations{};
    std::optional<std::uint64_t> seed{};  // gen only, 2tree
    std::string out = "-";              // gen only
};

inline std::optional<std::vector<FamilySpec>> expand(const FamilyOptions& opt, std::ostream& err) {
    const auto kind = parse_family_kind(opt.kind);
    if (!kind) {
        err << "error: unknown --kind '" << opt.kind << "'\n";
        return std::nullopt;
    }
    const auto n = parse_range(opt.n);
    if (!n) {
        err << "error: bad --n '" << opt.n << "'\n";
        return std::nullopt;
    }
    std::optional<Range> m;
    if (*kind == FamilyKind::CompleteBipartite) {
        m = parse_range(opt.m.empty() ? opt.n : opt.m);
        if (!m) {
            err << "error: bad --m '" << opt.m << "'\n";
            return std::nullopt;
        }
    }
    std::vector<FamilySpec> specs;
    for (int v = n->lo; v <= n->hi; ++v) {
        if (m) {
            for (int u = m->lo; u <= m->hi; ++u)
                if (u <= v) specs.push_back({*kind, v, u, opt.seed.value_or(0)});
        } else {
            specs.push_back({*kind, v, 0, opt.seed.value_or(0)});
        }
    }
    try {
        for (const auto& s : specs) validate(s);
        if (*kind == FamilyKind::TwoTree && !opt.seed && (n->lo < 3 || n->hi > 8))
            throw Error(ErrorCode::SpecOutOfRange, "2-tree enumeration needs 3 <= n <= 8");
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return std::nullopt;
    }
    if (specs.empty()) {
        err << "error: empty family range\n";
        return std::nullopt;
    }
    return specs;
}

inline std::vector<Graph> instances(const FamilySpec& spec, bool random_two_tree) {
    if (spec.kind == FamilyKind::TwoTree && !random_two_tree) return enumerate_two_trees(spec.n);
    return {generate(spec)};
}

inline std::string validity_text(const Validity& v) {
    if (!v.from_n) return "never confirmed";
    std::string s = "n>=" + std::to_string(*v.from_n);
    if (v.min_m > 0) s += ", m>=" + std::to_string(v.min_m);
    return s;
}

inline int cmd_family(const FamilyOptions& opt, std::ostream& out, std::ostream& err) {
    const auto specs = expand(opt, err);
    if (!specs) return kInputError;
    const bool two_tree = specs->front().kind == FamilyKind::TwoTree;

    if (!opt.verify) {
        for (const auto& spec : *specs)
            for (const Graph& g : instances(spec, opt.seed.has_value())) {
                const ParameterTable t = compute_table(g);
                out << g.id() << "  " << to_graph6(g) << "\n";
                for (ParameterId pid : kAllParameters)
                    out << "  " << pretty_name(pid) << " = " << to_string(t[pid]) << "\n";
            }
        return kOk;
    }

    std::vector<Certificate> certificates;
    bool failed = false;
    if (two_tree) {
        int total = 0, undefined = 0;
        for (const auto& spec : *specs) {
            for (const Graph& g : instances(spec, opt.seed.has_value())) {
                ++total;
                auto certs = check_graph(g, {ClaimId::P1});
                if (certs.empty()) ++undefined;
                for (auto& c : certs) certificates.push_back(std::move(c));
            }
        }
        failed = undefined != total;
        out << "2-trees checked: " << total << ", beta_s undefined: " << undefined << "  "
            << (failed ? "FAIL" : "pass") << "\n";
    } else {
        out << "instance   param       formula      expected   computed   validity              status\n";
        for (const auto& spec : *specs) {
            const FamilyCheck check = check_family(spec);
            for (const auto& row : check.rows) {
                const std::string expected = row.expected.value ? std::to_string(*row.expected.value) : "undefined";
                const char* status = row.expected.in_range ? (row.match ? "pass" : "FAIL")
                                                           : (row.match ? "outside (holds)" : "outside (differs)");
                char line[256];
                std::snprintf(line, sizeof line, "%-10s %-11s %-12s %-10s %-10s %-21s %s\n", label(spec).c_str(),
                              std::string(name(row.expected.pid)).c_str(), row.expected.expression.c_str(),
                              expected.c_str(), to_string(row.computed).c_str(),
                              validity_text(row.expected.validity).c_str(), status);
                out << line;
            }
            failed = failed || check.in_range_failure();
            for (auto& c : check.certificates) certificates.push_back(c);
        }
        out << (failed ? "result: in-range formula mismatch\n" : "result: all in-range formulas hold\n");
    }

    if (!opt.emit_violations.empty()) {
        std::ofstream file(opt.emit_violations);
        if (!file) {
            err << "error: cannot write " << opt.emit_violations << "\n";
            return kInputError;
        }
        for (auto& c : certificates) file << splitdom::to_json(c).dump() << "\n";
    }
    return failed ? kViolations : kOk;
}

inline int cmd_gen(const FamilyOptions& opt, std::ostream& out, std::ostream& err) {
    const auto specs = expand(opt, err);
    if (!specs) return kInputError;
    std::ofstream file;
    std::ostream* sink = &out;
    if (opt.out != "-") {
        file.open(opt.out);
        if (!file) {
            err << "error: cannot write " << opt.out << "\n";
            return kInputError;
        }
        sink = &file;
    }
    for (const auto& spec : *specs)
        for (const Graph& g : instances(spec, opt.seed.has_value())) *sink << to_graph6(g) << "\n";
    return kOk;
}

} // namespace splitdom::cli
