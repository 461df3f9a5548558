#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace splitdom {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

} // namespace detail

/// Decodes one graph6 line. Accepts an optional ">>graph6<<" header and trailing whitespace.
/// Only the single-byte size form is accepted since n <= 32.
inline Graph parse_graph6(std::string_view line) {
    line = detail::trim(line);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw Error(ErrorCode::MalformedGraph6, "empty line");
    for (char c : line)
        if (c < 63 || c > 126)
            throw Error(ErrorCode::MalformedGraph6, "byte " + std::to_string(int(c)) + " outside 63..126");

    const int n = line[0] - 63;
    if (n == 63) throw Error(ErrorCode::NTooLarge, "multi-byte graph6 size field");
    if (n > kMaxVertices) throw Error(ErrorCode::NTooLarge, "n = " + std::to_string(n));
    if (n == 0) throw Error(ErrorCode::MalformedGraph6, "graph without vertices");

    const std::size_t bit_count = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t byte_count = (bit_count + 5) / 6;
    if (line.size() != 1 + byte_count)
        throw Error(ErrorCode::MalformedGraph6, "expected " + std::to_string(1 + byte_count) + " bytes, got " +
                                                     std::to_string(line.size()));

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            const int chunk = line[1 + k / 6] - 63;
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    // padding bits must be zero for the encoding to be canonical
    for (; k < byte_count * 6; ++k)
        if (((line[1 + k / 6] - 63) >> (5 - k % 6)) & 1)
            throw Error(ErrorCode::MalformedGraph6, "nonzero padding bits");
    return g;
}

inline std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out(1, static_cast<char>(n + 63));
    int chunk = 0, used = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++used == 6) {
                out += static_cast<char>(chunk + 63);
                chunk = used = 0;
            }
        }
    }
    if (used > 0) out += static_cast<char>((chunk << (6 - used)) + 63);
    return out;
}

/// Edge-list text: first significant line "n", then one "u v" pair per line, 0-indexed.
/// '#' starts a comment that runs to end of line.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<Vertex, Vertex>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (detail::trim(line).empty()) continue;
        std::istringstream fields(line);
        if (n < 0) {
            if (!(fields >> n))
                throw Error(ErrorCode::MalformedEdgeList, "line " + std::to_string(line_no) + ": expected vertex count");
        } else {
            Vertex u, v;
            if (!(fields >> u >> v))
                throw Error(ErrorCode::MalformedEdgeList, "line " + std::to_string(line_no) + ": expected 'u v'");
            edges.emplace_back(u, v);
        }
        std::string extra;
        if (fields >> extra)
            throw Error(ErrorCode::MalformedEdgeList, "line " + std::to_string(line_no) + ": trailing tokens");
    }
    if (n < 0) throw Error(ErrorCode::MalformedEdgeList, "no vertex count");
    if (n < 1 || n > kMaxVertices) throw Error(ErrorCode::NTooLarge, "n = " + std::to_string(n));
    return from_edge_list(n, edges);
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

inline std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace splitdom
