#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sepcodes/errors.hpp"
#include "sepcodes/vertex_set.hpp"

namespace sepcodes {

using Edge = std::pair<Vertex, Vertex>;
using VertexPair = std::pair<Vertex, Vertex>;

// Finite simple undirected graph on vertices 0..order()-1. Immutable once
// built. Duplicate edges collapse; self-loops and out-of-range ids throw.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw InvalidInput("edge (" + std::to_string(u) + "," + std::to_string(v) +
                           ") references a vertex outside 0.." + std::to_string(n) + "-1");
      if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return adj_.size(); }

  std::size_t size() const noexcept {
    std::size_t twice = 0;
    for (const auto& a : adj_) twice += a.size();
    return twice / 2;
  }

  const VertexSet& neighbors(Vertex v) const {
    check(v);
    return adj_[v];
  }

  bool adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return adj_[u].contains(v);
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  // Edges (u,v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      adj_[u].for_each([&](Vertex v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  VertexSet empty_set() const { return VertexSet(order()); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check(Vertex v) const {
    if (v >= adj_.size())
      throw InvalidInput("vertex " + std::to_string(v) + " out of range for graph of order " +
                         std::to_string(adj_.size()));
  }

  std::vector<VertexSet> adj_;
};

// N(v)
inline VertexSet open_neighborhood(const Graph& g, Vertex v) { return g.neighbors(v); }

// N[v] = N(v) ∪ {v}
inline VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  VertexSet s = g.neighbors(v);
  s.insert(v);
  return s;
}

// Adjacent pairs u < v with N[u] = N[v].
inline std::vector<VertexPair> closed_twins(const Graph& g) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) && closed_neighborhood(g, u) == closed_neighborhood(g, v))
        out.emplace_back(u, v);
  return out;
}

// Non-adjacent pairs u < v with N(u) = N(v); two isolated vertices qualify.
inline std::vector<VertexPair> open_twins(const Graph& g) {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v) && g.neighbors(u) == g.neighbors(v)) out.emplace_back(u, v);
  return out;
}

inline bool is_twin_free(const Graph& g) { return closed_twins(g).empty() && open_twins(g).empty(); }

inline VertexSet isolated_vertices(const Graph& g) {
  VertexSet s(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.neighbors(v).empty()) s.insert(v);
  return s;
}

// Hop counts from source; std::nullopt marks unreachable vertices.
inline std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  g.neighbors(source);  // range check
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](Vertex w) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

// Shortest-path length, or std::nullopt (infinite) across components.
inline std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  g.neighbors(v);
  return distances_from(g, u)[v];
}

// Vertices at distance 1 or 2 from v.
inline VertexSet ball2_without_center(const Graph& g, Vertex v) {
  VertexSet out = g.neighbors(v);
  g.neighbors(v).for_each([&](Vertex w) { out |= g.neighbors(w); });
  out.erase(v);
  return out;
}

// Vertices of b are shifted by a.order(); no edges between the parts.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

// Subgraph induced on vertices not in `drop`, relabelled densely in id order.
inline Graph remove_vertices(const Graph& g, const VertexSet& drop) {
  std::vector<Vertex> index(g.order(), g.order());
  std::size_t next = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!drop.contains(v)) index[v] = next++;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (index[u] < g.order() && index[v] < g.order()) edges.emplace_back(index[u], index[v]);
  return Graph(next, edges);
}

}  // namespace sepcodes
