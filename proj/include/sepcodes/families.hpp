#pragma once

#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sepcodes/codes.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/graph.hpp"

namespace sepcodes {

enum class Family { Path, Cycle, HalfGraph, ThinSpider, ThickSpider };

struct FamilySpec {
  Family family = Family::Path;
  std::size_t size = 1;        // n for paths and cycles, k otherwise
  bool with_isolated = false;  // append K_1

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

inline std::string_view family_keyword(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::HalfGraph: return "half";
    case Family::ThinSpider: return "thin";
    case Family::ThickSpider: return "thick";
  }
  return "?";
}

inline std::string to_string(const FamilySpec& spec) {
  return std::string(family_keyword(spec.family)) + ":" + std::to_string(spec.size) +
         (spec.with_isolated ? "+k1" : "");
}

inline std::size_t minimum_size(Family f) {
  switch (f) {
    case Family::Path: return 1;
    case Family::Cycle: return 3;
    case Family::HalfGraph: return 1;
    case Family::ThinSpider:
    case Family::ThickSpider: return 2;
  }
  return 1;
}

// "path:12", "cycle:9", "half:4", "thin:5", "thick:5", optionally "+k1".
inline FamilySpec parse_family_spec(std::string_view text) {
  FamilySpec spec;
  constexpr std::string_view kIsolated = "+k1";
  if (text.size() > kIsolated.size() && text.substr(text.size() - kIsolated.size()) == kIsolated) {
    spec.with_isolated = true;
    text.remove_suffix(kIsolated.size());
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw InvalidInput("family spec needs the form name:size");
  const auto name = text.substr(0, colon);
  const auto number = text.substr(colon + 1);
  bool known = false;
  for (Family f : {Family::Path, Family::Cycle, Family::HalfGraph, Family::ThinSpider, Family::ThickSpider})
    if (family_keyword(f) == name) {
      spec.family = f;
      known = true;
    }
  if (!known) throw InvalidInput("unknown graph family '" + std::string(name) + "'");
  const auto [end, ec] = std::from_chars(number.data(), number.data() + number.size(), spec.size);
  if (ec != std::errc{} || end != number.data() + number.size())
    throw InvalidInput("bad family size '" + std::string(number) + "'");
  if (spec.size < minimum_size(spec.family))
    throw InvalidInput(std::string(family_keyword(spec.family)) + " needs size >= " +
                       std::to_string(minimum_size(spec.family)));
  return spec;
}

inline Graph path_graph(std::size_t n) {
  if (n < 1) throw InvalidInput("path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, edges);
}

// u_i -> i-1, w_j -> k+j-1; u_i w_j is an edge iff i <= j.
inline Graph half_graph(std::size_t k) {
  if (k < 1) throw InvalidInput("half-graph needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i; j < k; ++j) edges.emplace_back(i, k + j);
  return Graph(2 * k, edges);
}

namespace detail {

// q_i -> i-1 (clique), s_i -> k+i-1 (stable set).
inline Graph headless_spider(std::size_t k, bool thick) {
  if (k < 2) throw InvalidInput("headless spider needs k >= 2");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  for (Vertex i = 0; i < k; ++i)
    for (Vertex j = 0; j < k; ++j)
      if ((i == j) != thick) edges.emplace_back(k + i, j);
  return Graph(2 * k, edges);
}

}  // namespace detail

inline Graph thin_spider(std::size_t k) { return detail::headless_spider(k, false); }
inline Graph thick_spider(std::size_t k) { return detail::headless_spider(k, true); }

inline Graph generate(const FamilySpec& spec) {
  if (spec.size < minimum_size(spec.family))
    throw InvalidInput(to_string(spec) + ": size below the family minimum");
  Graph g;
  switch (spec.family) {
    case Family::Path: g = path_graph(spec.size); break;
    case Family::Cycle: g = cycle_graph(spec.size); break;
    case Family::HalfGraph: g = half_graph(spec.size); break;
    case Family::ThinSpider: g = thin_spider(spec.size); break;
    case Family::ThickSpider: g = thick_spider(spec.size); break;
  }
  return spec.with_isolated ? disjoint_union(g, Graph(1)) : g;
}

namespace detail {

// n = 6q + r: 4q + r for r <= 4, 4q + 4 for r = 5.
inline std::size_t path_cycle_full_separation_number(std::size_t n) {
  const std::size_t q = n / 6, r = n % 6;
  return r == 5 ? 4 * q + 4 : 4 * q + r;
}

inline std::size_t cycle_otd_number(std::size_t n) {
  const std::size_t q = n / 6, r = n % 6;
  if (r == 3) return 4 * q + 2;
  return r == 5 ? 4 * q + 4 : 4 * q + r;
}

inline std::optional<std::size_t> base_formula(Family family, std::size_t n, CodeKind x) {
  using K = CodeKind;
  switch (family) {
    case Family::Path:
      if (n >= 4 && (x == K::FD || x == K::FTD || x == K::OTD)) return path_cycle_full_separation_number(n);
      return std::nullopt;
    case Family::Cycle:
      if (n >= 5 && (x == K::FD || x == K::FTD)) return path_cycle_full_separation_number(n);
      if (n >= 5 && x == K::OTD) return cycle_otd_number(n);
      return std::nullopt;
    case Family::HalfGraph:
      if (x == K::FD && n >= 3) return 2 * n - 1;
      if (x == K::FTD && n >= 2) return 2 * n;
      if (x == K::OTD && n >= 1) return 2 * n;
      return std::nullopt;
    case Family::ThinSpider:
      if (n < 4) return std::nullopt;
      switch (x) {
        case K::FD: return 2 * n - 2;
        case K::FTD: return 2 * n - 1;
        case K::ID: return n + 1;
        case K::ITD: return 2 * n - 1;
        case K::LD:
        case K::LTD:
        case K::OD:
        case K::OTD: return n;
      }
      return std::nullopt;
    case Family::ThickSpider:
      if (n < 4) return std::nullopt;
      switch (x) {
        case K::ITD: return n + 1;
        case K::FD:
        case K::FTD: return 2 * n - 2;
        case K::LD:
        case K::LTD: return n - 1;
        case K::OD:
        case K::OTD: return n + 1;
        case K::ID: return n;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace detail

// Closed-form γ^X where a proven (or restated) result covers the family and
// parameter; std::nullopt otherwise. With an appended K_1 only FD is known:
// γ^FD(G + K_1) = γ^FTD(G) + 1.
inline std::optional<std::size_t> formula_x_number(const FamilySpec& spec, CodeKind x) {
  if (!spec.with_isolated) return detail::base_formula(spec.family, spec.size, x);
  if (x != CodeKind::FD) return std::nullopt;
  const auto ftd = detail::base_formula(spec.family, spec.size, CodeKind::FTD);
  if (!ftd) return std::nullopt;
  return *ftd + 1;
}

// Explicit FTD-code of P_n (n >= 4) or C_n (n >= 5) with n = 6q + r, in
// 1-based terms: v_{6k-4..6k-1} for k = 1..q, then v_{6q..6q+r-1} when
// 1 <= r <= 4 or v_{6q+1..6q+4} when r = 5; {v_1..v_4} when q = 0.
inline VertexSet ftd_code_path_cycle(std::size_t n, bool cyclic) {
  if (n < (cyclic ? 5U : 4U))
    throw InvalidInput(std::string(cyclic ? "cycle" : "path") + " too short for the explicit FTD-code");
  VertexSet code(n);
  auto take = [&](std::size_t first, std::size_t last) {  // 1-based, inclusive
    for (std::size_t i = first; i <= last; ++i) code.insert(i - 1);
  };
  const std::size_t q = n / 6, r = n % 6;
  if (q == 0) {
    take(1, 4);
    return code;
  }
  for (std::size_t k = 1; k <= q; ++k) take(6 * k - 4, 6 * k - 1);
  if (r >= 1 && r <= 4) take(6 * q, 6 * q + r - 1);
  if (r == 5) take(6 * q + 1, 6 * q + 4);
  return code;
}

}  // namespace sepcodes
