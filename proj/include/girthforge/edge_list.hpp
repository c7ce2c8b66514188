#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "girthforge/graph.hpp"

namespace girthforge {

// Malformed edge-list input; `line` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool next_token(std::string_view& s, std::string_view& token) {
  s = trim(s);
  if (s.empty()) return false;
  std::size_t end = 0;
  while (end < s.size() && s[end] != ' ' && s[end] != '\t') ++end;
  token = s.substr(0, end);
  s.remove_prefix(end);
  return true;
}

inline bool parse_index(std::string_view token, std::uint64_t& out) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

}  // namespace detail

/// Reads the edge-list format: one edge per line as two whitespace-separated
/// 0-based vertex indices; blank lines and lines starting with '#' are
/// skipped. A comment of the form "# vertices N" fixes the vertex count
/// (otherwise it is one more than the largest index), so isolated trailing
/// vertices survive a write/read cycle.
inline Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t max_index_plus_one = 0;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    std::string_view rest = detail::trim(line);
    if (rest.empty()) continue;
    if (rest.front() == '#') {
      rest.remove_prefix(1);
      std::string_view key, value;
      std::uint64_t count = 0;
      if (detail::next_token(rest, key) && key == "vertices" && detail::next_token(rest, value) &&
          detail::parse_index(value, count)) {
        declared = count;
        has_declared = true;
        if (declared < max_index_plus_one)
          throw ParseError(lineno, "declared vertex count " + std::to_string(declared) + " is below index " +
                                       std::to_string(max_index_plus_one - 1));
      }
      continue;
    }
    std::string_view a, b, extra;
    std::uint64_t u = 0, v = 0;
    if (!detail::next_token(rest, a) || !detail::next_token(rest, b) || detail::next_token(rest, extra))
      throw ParseError(lineno, "expected two vertex indices");
    if (!detail::parse_index(a, u) || !detail::parse_index(b, v))
      throw ParseError(lineno, "vertex indices must be non-negative integers");
    if (u > 0xFFFFFFFEULL || v > 0xFFFFFFFEULL) throw ParseError(lineno, "vertex index too large");
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    const Edge e = make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    if (!seen.insert(e).second)
      throw ParseError(lineno, "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    if (has_declared && e.v >= declared)
      throw ParseError(lineno, "vertex " + std::to_string(e.v) + " outside the declared count " + std::to_string(declared));
    edges.push_back(e);
    max_index_plus_one = std::max<std::size_t>(max_index_plus_one, e.v + 1);
  }
  return Graph(has_declared ? declared : max_index_plus_one, std::move(edges));
}

inline Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices " << g.order() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace girthforge
