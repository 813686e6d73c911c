#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sepcodes/errors.hpp"
#include "sepcodes/graph.hpp"

namespace sepcodes {

namespace detail {

inline std::string strip_cr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

inline bool is_blank_or_comment(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace detail

// Edge-list text: header "n m", then m lines "u v" (0-based). Lines starting
// with '#' and blank lines are skipped; LF and CRLF both accepted.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    line = detail::strip_cr(line);
    if (detail::is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError(lineno, have_header ? "expected 'u v'" : "expected header 'n m'");
    if (a < 0 || b < 0) throw ParseError(lineno, "negative value");
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError(lineno, "more than " + std::to_string(m) + " edges");
    const auto u = static_cast<Vertex>(a), v = static_cast<Vertex>(b);
    if (u >= n || v >= n) throw ParseError(lineno, "vertex id out of range");
    if (u == v) throw ParseError(lineno, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(u, v);
  }
  if (!have_header) throw ParseError(lineno, "missing header 'n m'");
  if (edges.size() != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph(n, edges);
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace sepcodes
