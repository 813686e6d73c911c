#pragma once

// Brute-force reference implementations for the tests. Deliberately naive:
// plain vectors of bools, sets of traces, subset enumeration. Nothing here
// calls into the library's separation or cover logic.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "sepcodes/codes.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/reduction.hpp"

namespace oracle {

using sepcodes::CodeKind;
using sepcodes::Graph;
using sepcodes::Vertex;
using sepcodes::VertexSet;

using Matrix = std::vector<std::vector<bool>>;
using Members = std::vector<bool>;

inline Matrix adjacency(const Graph& g) {
  const std::size_t n = g.order();
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = true;
  return a;
}

inline Members members(const VertexSet& c) {
  Members m(c.universe(), false);
  for (Vertex v = 0; v < c.universe(); ++v) m[v] = c.contains(v);
  return m;
}

inline VertexSet from_mask(std::size_t n, std::uint64_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1U) s.insert(v);
  return s;
}

// trace of v: code vertices in N(v) (open) or N[v] (closed), as a sorted list
inline std::vector<Vertex> trace(const Matrix& a, const Members& c, Vertex v, bool closed) {
  std::vector<Vertex> t;
  for (Vertex w = 0; w < a.size(); ++w)
    if (c[w] && (a[v][w] || (closed && w == v))) t.push_back(w);
  return t;
}

inline bool dominating(const Matrix& a, const Members& c, bool closed) {
  for (Vertex v = 0; v < a.size(); ++v)
    if (trace(a, c, v, closed).empty()) return false;
  return true;
}

// all traces pairwise distinct, over the vertices selected by `over`
inline bool distinct_traces(const Matrix& a, const Members& c, bool closed, const Members& over) {
  std::set<std::vector<Vertex>> seen;
  std::size_t count = 0;
  for (Vertex v = 0; v < a.size(); ++v) {
    if (!over[v]) continue;
    seen.insert(trace(a, c, v, closed));
    ++count;
  }
  return seen.size() == count;
}

inline bool closed_separating(const Matrix& a, const Members& c) {
  return distinct_traces(a, c, true, Members(a.size(), true));
}

inline bool open_separating(const Matrix& a, const Members& c) {
  return distinct_traces(a, c, false, Members(a.size(), true));
}

inline bool locating(const Matrix& a, const Members& c) {
  Members outside(a.size());
  for (Vertex v = 0; v < a.size(); ++v) outside[v] = !c[v];
  return distinct_traces(a, c, false, outside);
}

// punctured definition straight from the glossary
inline bool full_separating(const Matrix& a, const Members& c) {
  const std::size_t n = a.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool differ = false;
      for (Vertex w = 0; w < n && !differ; ++w)
        if (c[w] && w != u && w != v && a[u][w] != a[v][w]) differ = true;
      if (!differ) return false;
    }
  return true;
}

inline bool is_code(const Graph& g, CodeKind x, const VertexSet& code) {
  const Matrix a = adjacency(g);
  const Members c = members(code);
  const bool total = x == CodeKind::ITD || x == CodeKind::LTD || x == CodeKind::FTD || x == CodeKind::OTD;
  if (!dominating(a, c, !total)) return false;
  switch (x) {
    case CodeKind::ID:
    case CodeKind::ITD:
      return closed_separating(a, c);
    case CodeKind::LD:
    case CodeKind::LTD:
      return locating(a, c);
    case CodeKind::FD:
    case CodeKind::FTD:
      return full_separating(a, c);
    case CodeKind::OD:
    case CodeKind::OTD:
      return open_separating(a, c);
  }
  return false;
}

// smallest code by subset enumeration in order of size; nullopt if none exists
inline std::optional<std::size_t> code_number(const Graph& g, CodeKind x) {
  const std::size_t n = g.order();
  for (std::size_t k = 0; k <= n; ++k)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) == k && is_code(g, x, from_mask(n, mask))) return k;
  return std::nullopt;
}

inline std::vector<VertexSet> minimum_codes(const Graph& g, CodeKind x) {
  const std::size_t n = g.order();
  std::vector<VertexSet> best;
  std::size_t best_size = n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (k > best_size) continue;
    const VertexSet c = from_mask(n, mask);
    if (!is_code(g, x, c)) continue;
    if (k < best_size) {
      best.clear();
      best_size = k;
    }
    best.push_back(c);
  }
  return best;
}

inline bool hits_all(const std::vector<std::vector<Vertex>>& edges, std::uint64_t mask) {
  for (const auto& e : edges) {
    bool hit = false;
    for (Vertex v : e) hit = hit || (mask >> v & 1U);
    if (!hit) return false;
  }
  return true;
}

// covering number by enumeration; nullopt when some hyperedge is empty
inline std::optional<std::size_t> tau(const sepcodes::Hypergraph& h) {
  std::vector<std::vector<Vertex>> edges;
  for (const auto& e : h.edges()) edges.push_back(e.to_vector());
  const std::size_t n = h.universe();
  for (std::size_t k = 0; k <= n; ++k)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
      if (static_cast<std::size_t>(__builtin_popcountll(mask)) == k && hits_all(edges, mask)) return k;
  return std::nullopt;
}

inline bool twin_free(const Graph& g) {
  const Matrix a = adjacency(g);
  const std::size_t n = a.size();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      bool same_open = true, same_closed = true;
      for (Vertex w = 0; w < n; ++w) {
        same_open = same_open && a[u][w] == a[v][w];
        const bool cu = a[u][w] || w == u, cv = a[v][w] || w == v;
        same_closed = same_closed && cu == cv;
      }
      if (same_open || same_closed) return false;
    }
  return true;
}

inline bool has_isolated(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

inline bool satisfiable(const sepcodes::CnfFormula& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.num_vars); ++mask) {
    bool all = true;
    for (const auto& clause : f.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = mask >> (std::abs(lit) - 1) & 1U;
        any = any || (lit > 0 ? value : !value);
      }
      all = all && any;
    }
    if (all) return true;
  }
  return false;
}

// ---- random inputs ----

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<sepcodes::Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Graph random_twin_free_graph(std::mt19937_64& rng, std::size_t min_n, std::size_t max_n) {
  std::uniform_int_distribution<std::size_t> order(min_n, max_n);
  std::uniform_real_distribution<double> density(0.25, 0.65);
  for (;;) {
    Graph g = random_graph(rng, order(rng), density(rng));
    if (twin_free(g) && !has_isolated(g)) return g;
  }
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) s.insert(v);
  return s;
}

inline sepcodes::Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  sepcodes::Hypergraph h(n);
  for (std::size_t i = 0; i < m; ++i) {
    VertexSet e = random_subset(rng, n, 0.3);
    if (e.empty()) e.insert(std::uniform_int_distribution<Vertex>(0, n - 1)(rng));
    h.add_edge(e);
  }
  return h;
}

inline sepcodes::CnfFormula random_cnf(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  sepcodes::CnfFormula f{n, {}};
  std::uniform_int_distribution<int> arity(1, static_cast<int>(std::min<std::size_t>(3, n)));
  std::bernoulli_distribution negate(0.5);
  for (std::size_t y = 0; y < m; ++y) {
    std::vector<int> vars(n);
    for (std::size_t i = 0; i < n; ++i) vars[i] = static_cast<int>(i) + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    sepcodes::Clause clause;
    for (int i = 0, k = arity(rng); i < k; ++i) clause.push_back(negate(rng) ? -vars[i] : vars[i]);
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace oracle
