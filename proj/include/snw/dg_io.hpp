#pragma once

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "snw/digraph.hpp"

namespace snw {

// DG text format, version 1. Bit-exact layout:
//   DG 1
//   <n> <edge_count>
//   <u> <v>          (one line per edge, ascending (u, v), 0-based)
// Single spaces, LF endings, no trailing blank line.
inline std::string write_dg(const Digraph& g) {
    std::string out = "DG 1\n";
    const auto edges = g.edges();
    out += std::to_string(g.n()) + " " + std::to_string(edges.size()) + "\n";
    for (const auto& [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

namespace detail {

inline int parse_int_field(std::string_view text, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(errc::parse_error, std::string("bad ") + what + ": '" + std::string(text) + "'");
    return value;
}

// Splits "a b" into exactly two fields separated by one space.
inline std::pair<std::string_view, std::string_view> split_pair_line(std::string_view line) {
    const auto space = line.find(' ');
    if (space == std::string_view::npos || line.find(' ', space + 1) != std::string_view::npos)
        fail(errc::parse_error, "expected two space-separated fields: '" + std::string(line) + "'");
    return {line.substr(0, space), line.substr(space + 1)};
}

}  // namespace detail

inline Digraph parse_dg(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        if (nl == std::string_view::npos) {
            lines.push_back(text);
            break;
        }
        lines.push_back(text.substr(0, nl));
        text.remove_prefix(nl + 1);
    }
    if (!lines.empty() && lines.back().empty()) lines.pop_back();
    if (lines.size() < 2 || lines[0] != "DG 1")
        fail(errc::parse_error, "missing 'DG 1' header");
    const auto [n_text, count_text] = detail::split_pair_line(lines[1]);
    const int n = detail::parse_int_field(n_text, "vertex count");
    const int edge_count = detail::parse_int_field(count_text, "edge count");
    if (edge_count < 0 || static_cast<std::size_t>(edge_count) != lines.size() - 2)
        fail(errc::parse_error, "edge count does not match number of edge lines");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(edge_count));
    for (std::size_t i = 2; i < lines.size(); ++i) {
        const auto [u_text, v_text] = detail::split_pair_line(lines[i]);
        edges.emplace_back(detail::parse_int_field(u_text, "edge endpoint"),
                           detail::parse_int_field(v_text, "edge endpoint"));
    }
    return Digraph::from_edges(n, edges);
}

inline Digraph load_dg(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dg(buf.str());
}

inline void save_dg(const Digraph& g, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
    out << write_dg(g);
}

}  // namespace snw
