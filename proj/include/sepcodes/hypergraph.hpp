#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "sepcodes/errors.hpp"
#include "sepcodes/vertex_set.hpp"

namespace sepcodes {

// Hyperedges over the universe {0..universe-1}, kept in insertion order.
class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t universe) : universe_(universe) {}
  Hypergraph(std::size_t universe, std::vector<VertexSet> edges) : universe_(universe) {
    edges_.reserve(edges.size());
    for (auto& e : edges) add_edge(std::move(e));
  }

  void add_edge(VertexSet e) {
    if (e.universe() != universe_)
      throw UniverseMismatch("hyperedge over universe " + std::to_string(e.universe()) +
                             " added to hypergraph over " + std::to_string(universe_));
    edges_.push_back(std::move(e));
  }

  std::size_t universe() const noexcept { return universe_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<VertexSet>& edges() const noexcept { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_.at(i); }

  bool has_empty_edge() const {
    return std::any_of(edges_.begin(), edges_.end(), [](const VertexSet& e) { return e.empty(); });
  }

 private:
  std::size_t universe_ = 0;
  std::vector<VertexSet> edges_;
};

// C ∩ F ≠ ∅ for every hyperedge F. Vacuously true without hyperedges.
inline bool is_cover(const Hypergraph& h, const VertexSet& c) {
  if (c.universe() != h.universe())
    throw UniverseMismatch("candidate cover and hypergraph use different universes");
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const VertexSet& e) { return e.intersects(c); });
}

// Keeps the inclusion-minimal hyperedges, first occurrence of each, in their
// original relative order. The set of covers is unchanged.
inline Hypergraph remove_redundant(const Hypergraph& h) {
  std::vector<std::size_t> unique;
  {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (std::size_t i = 0; i < h.num_edges(); ++i)
      if (seen.insert(h.edge(i)).second) unique.push_back(i);
  }
  std::vector<std::size_t> by_size = unique;
  std::stable_sort(by_size.begin(), by_size.end(), [&](std::size_t a, std::size_t b) {
    return h.edge(a).size() < h.edge(b).size();
  });
  std::vector<std::size_t> kept;
  std::vector<char> keep(h.num_edges(), 0);
  for (std::size_t i : by_size) {
    const VertexSet& e = h.edge(i);
    // Distinct sets: a kept subset of size <= |e| is necessarily proper.
    const bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::size_t k) {
      return h.edge(k).is_subset_of(e);
    });
    if (!dominated) {
      kept.push_back(i);
      keep[i] = 1;
    }
  }
  Hypergraph out(h.universe());
  for (std::size_t i : unique)
    if (keep[i]) out.add_edge(h.edge(i));
  return out;
}

// h ≺ h2: every hyperedge of h2 contains some hyperedge of h.
inline bool precedes(const Hypergraph& h, const Hypergraph& h2) {
  if (h.universe() != h2.universe())
    throw UniverseMismatch("precedence between hypergraphs over different universes");
  return std::all_of(h2.edges().begin(), h2.edges().end(), [&](const VertexSet& f2) {
    return std::any_of(h.edges().begin(), h.edges().end(),
                       [&](const VertexSet& f) { return f.is_subset_of(f2); });
  });
}

// One hyperedge per line, ids ascending and space separated; lines sorted
// lexicographically. The empty hyperedge is an empty line.
inline void write_dump(std::ostream& out, const Hypergraph& h) {
  std::vector<std::vector<Vertex>> rows;
  rows.reserve(h.num_edges());
  for (const auto& e : h.edges()) rows.push_back(e.to_vector());
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
}

inline std::string dump(const Hypergraph& h) {
  std::ostringstream out;
  write_dump(out, h);
  return out.str();
}

}  // namespace sepcodes
