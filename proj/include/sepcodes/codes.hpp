#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sepcodes/cover_solver.hpp"
#include "sepcodes/errors.hpp"
#include "sepcodes/graph.hpp"
#include "sepcodes/hypergraph.hpp"

namespace sepcodes {

enum class CodeKind { ID, ITD, LD, LTD, FD, FTD, OD, OTD };

inline constexpr std::array<CodeKind, 8> kAllCodeKinds{CodeKind::ID, CodeKind::ITD, CodeKind::LD,
                                                       CodeKind::LTD, CodeKind::FD, CodeKind::FTD,
                                                       CodeKind::OD, CodeKind::OTD};

inline std::string_view to_string(CodeKind x) {
  switch (x) {
    case CodeKind::ID: return "ID";
    case CodeKind::ITD: return "ITD";
    case CodeKind::LD: return "LD";
    case CodeKind::LTD: return "LTD";
    case CodeKind::FD: return "FD";
    case CodeKind::FTD: return "FTD";
    case CodeKind::OD: return "OD";
    case CodeKind::OTD: return "OTD";
  }
  return "?";
}

// Case-insensitive: id, itd, ld, ltd, fd, ftd, od, otd.
inline CodeKind parse_code_kind(std::string_view text) {
  std::string upper(text);
  for (auto& c : upper) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (CodeKind x : kAllCodeKinds)
    if (to_string(x) == upper) return x;
  throw InvalidInput("unknown code kind '" + std::string(text) + "'");
}

enum class Closure { Closed, Open };

// Which neighbourhood family enters each of the three hyperedge groups.
struct SeparationFamilies {
  Closure domination;         // N[G] or N(G)
  Closure adjacent_pairs;     // Δa[G] or Δa(G)
  Closure nonadjacent_pairs;  // Δn[G] or Δn(G)

  friend bool operator==(const SeparationFamilies&, const SeparationFamilies&) = default;
};

inline constexpr SeparationFamilies separation_families(CodeKind x) {
  constexpr auto C = Closure::Closed;
  constexpr auto O = Closure::Open;
  switch (x) {
    case CodeKind::ID: return {C, C, C};
    case CodeKind::ITD: return {O, C, C};
    case CodeKind::LD: return {C, O, C};
    case CodeKind::LTD: return {O, O, C};
    case CodeKind::FD: return {C, C, O};
    case CodeKind::FTD: return {O, C, O};
    case CodeKind::OD: return {C, O, O};
    case CodeKind::OTD: return {O, O, O};
  }
  return {C, C, C};
}

inline constexpr bool is_total(CodeKind x) { return separation_families(x).domination == Closure::Open; }

inline VertexSet neighborhood(const Graph& g, Vertex v, Closure c) {
  return c == Closure::Closed ? closed_neighborhood(g, v) : open_neighborhood(g, v);
}

// Hyperedges: all neighbourhoods by vertex id, then sym-diffs of adjacent
// pairs (u < v, lex), then of non-adjacent pairs (lex). Non-admissible graphs
// produce an empty hyperedge.
inline Hypergraph build_hypergraph(const Graph& g, CodeKind x) {
  const auto fam = separation_families(x);
  const std::size_t n = g.order();
  Hypergraph h(n);
  for (Vertex v = 0; v < n; ++v) h.add_edge(neighborhood(g, v, fam.domination));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (g.adjacent(u, v))
        h.add_edge(sym_diff(neighborhood(g, u, fam.adjacent_pairs), neighborhood(g, v, fam.adjacent_pairs)));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v))
        h.add_edge(sym_diff(neighborhood(g, u, fam.nonadjacent_pairs),
                            neighborhood(g, v, fam.nonadjacent_pairs)));
  return h;
}

inline bool is_admissible(const Graph& g, CodeKind x) { return !build_hypergraph(g, x).has_empty_edge(); }

// Same question answered from graph structure: isolated vertices kill total
// domination, closed twins kill Δa[G], open twins kill Δn(G).
inline bool is_admissible_structural(const Graph& g, CodeKind x) {
  const auto fam = separation_families(x);
  if (fam.domination == Closure::Open && !isolated_vertices(g).empty()) return false;
  if (fam.adjacent_pairs == Closure::Closed && !closed_twins(g).empty()) return false;
  if (fam.nonadjacent_pairs == Closure::Open && !open_twins(g).empty()) return false;
  return true;
}

namespace detail {

inline void require_universe(const Graph& g, const VertexSet& c) {
  if (c.universe() != g.order())
    throw UniverseMismatch("code over universe " + std::to_string(c.universe()) +
                           " checked against graph of order " + std::to_string(g.order()));
}

inline bool dominates(const Graph& g, const VertexSet& c, Closure how) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (!neighborhood(g, v, how).intersects(c)) return false;
  return true;
}

// Traces N⟨v⟩ ∩ C pairwise distinct over the given vertices.
inline bool traces_distinct(const Graph& g, const VertexSet& c, Closure how,
                            const std::vector<Vertex>& vertices) {
  std::set<std::vector<Vertex>> seen;
  for (Vertex v : vertices)
    if (!seen.insert((neighborhood(g, v, how) & c).to_vector()).second) return false;
  return true;
}

inline std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> vs(g.order());
  for (Vertex v = 0; v < g.order(); ++v) vs[v] = v;
  return vs;
}

// (N(v) ∩ C) \ {u} ≠ (N(u) ∩ C) \ {v}
inline bool punctured_traces_differ(const Graph& g, const VertexSet& c, Vertex u, Vertex v) {
  VertexSet tu = g.neighbors(u) & c;
  VertexSet tv = g.neighbors(v) & c;
  tv.erase(u);
  tu.erase(v);
  return tu != tv;
}

}  // namespace detail

// C is closed-separating: N[v] ∩ C is unique for every vertex.
inline bool is_closed_separating(const Graph& g, const VertexSet& c) {
  detail::require_universe(g, c);
  return detail::traces_distinct(g, c, Closure::Closed, detail::all_vertices(g));
}

// C is open-separating: N(v) ∩ C is unique for every vertex.
inline bool is_open_separating(const Graph& g, const VertexSet& c) {
  detail::require_universe(g, c);
  return detail::traces_distinct(g, c, Closure::Open, detail::all_vertices(g));
}

// C is locating: N(v) ∩ C is unique among vertices outside C.
inline bool is_locating(const Graph& g, const VertexSet& c) {
  detail::require_universe(g, c);
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!c.contains(v)) outside.push_back(v);
  return detail::traces_distinct(g, c, Closure::Open, outside);
}

// Full separation straight from the definition.
inline bool is_full_separating(const Graph& g, const VertexSet& c) {
  detail::require_universe(g, c);
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!detail::punctured_traces_differ(g, c, u, v)) return false;
  return true;
}

// Checks domination and the separation property of x from their definitions,
// without going through the hypergraph.
inline bool verify_code(const Graph& g, CodeKind x, const VertexSet& c) {
  detail::require_universe(g, c);
  if (!detail::dominates(g, c, separation_families(x).domination)) return false;
  switch (x) {
    case CodeKind::ID:
    case CodeKind::ITD: return is_closed_separating(g, c);
    case CodeKind::LD:
    case CodeKind::LTD: return is_locating(g, c);
    case CodeKind::FD:
    case CodeKind::FTD: return is_full_separating(g, c);
    case CodeKind::OD:
    case CodeKind::OTD: return is_open_separating(g, c);
  }
  return false;
}

// The five equivalent characterisations of a full-separating set.
enum class FullSeparationVariant { PuncturedTraces, PuncturedSymDiff, AdjacencySplit, BothTraces, ClosedAndOpen };

inline bool verify_full_separating(const Graph& g, const VertexSet& c, FullSeparationVariant variant) {
  detail::require_universe(g, c);
  const std::size_t n = g.order();
  switch (variant) {
    case FullSeparationVariant::PuncturedTraces:
      return is_full_separating(g, c);

    case FullSeparationVariant::PuncturedSymDiff:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          VertexSet d = sym_diff(g.neighbors(u), g.neighbors(v));
          d.erase(u);
          d.erase(v);
          if (!d.intersects(c)) return false;
        }
      return true;

    case FullSeparationVariant::AdjacencySplit:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          const Closure how = g.adjacent(u, v) ? Closure::Closed : Closure::Open;
          if (!sym_diff(neighborhood(g, u, how), neighborhood(g, v, how)).intersects(c)) return false;
        }
      return true;

    case FullSeparationVariant::BothTraces:
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
          if ((closed_neighborhood(g, u) & c) == (closed_neighborhood(g, v) & c)) return false;
          if ((g.neighbors(u) & c) == (g.neighbors(v) & c)) return false;
        }
      return true;

    case FullSeparationVariant::ClosedAndOpen:
      return is_closed_separating(g, c) && is_open_separating(g, c);
  }
  return false;
}

// FD/FTD check that only separates pairs at distance at most two; farther
// pairs are handled by (near-)total domination.
inline bool verify_code_fast(const Graph& g, CodeKind x, const VertexSet& c) {
  if (x != CodeKind::FD && x != CodeKind::FTD)
    throw InvalidInput("fast verification only supports FD and FTD");
  detail::require_universe(g, c);
  const std::size_t n = g.order();
  if (x == CodeKind::FTD) {
    if (!detail::dominates(g, c, Closure::Open)) return false;
  } else {
    if (!detail::dominates(g, c, Closure::Closed)) return false;
    std::size_t unreached = 0;
    for (Vertex v = 0; v < n; ++v)
      if (!g.neighbors(v).intersects(c) && ++unreached > 1) return false;
  }
  for (Vertex u = 0; u < n; ++u) {
    bool ok = true;
    ball2_without_center(g, u).for_each([&](Vertex v) {
      if (ok && u < v && !detail::punctured_traces_differ(g, c, u, v)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// Vertices w with {w} = (N(u) \ {v}) △ (N(v) \ {u}) for some pair u, v.
// Every full-separating set contains all of them.
inline VertexSet forced_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      VertexSet nu = g.neighbors(u), nv = g.neighbors(v);
      nu.erase(v);
      nv.erase(u);
      const VertexSet d = sym_diff(nu, nv);
      if (d.size() == 1) out |= d;
    }
  return out;
}

// γ^X(g) as the covering number of the reduced X-hypergraph.
inline CoverResult x_number(const Graph& g, CodeKind x, const CoverOptions& opts = {}) {
  const Hypergraph h = build_hypergraph(g, x);
  if (h.has_empty_edge())
    throw NotAdmissible("graph is not " + std::string(to_string(x)) + "-admissible");
  CoverResult r = min_cover(remove_redundant(h), opts);
  if (!verify_code(g, x, r.witness))
    throw std::logic_error("solver witness failed " + std::string(to_string(x)) + " verification");
  return r;
}

}  // namespace sepcodes
