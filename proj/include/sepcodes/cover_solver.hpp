#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "sepcodes/errors.hpp"
#include "sepcodes/hypergraph.hpp"
#include "sepcodes/vertex_set.hpp"

namespace sepcodes {

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

struct CoverOptions {
  std::uint64_t node_budget = kDefaultNodeBudget;
  // Values above 1 split the root branches across worker threads. The size is
  // unaffected; the witness is only reproducible with a single thread.
  unsigned threads = 1;
};

struct CoverResult {
  std::size_t size = 0;
  VertexSet witness;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

namespace detail {

inline void require_no_empty_edge(const Hypergraph& h) {
  if (h.has_empty_edge())
    throw EmptyHyperedge("hypergraph contains the empty hyperedge; no cover exists");
}

// Greedy packing of pairwise-disjoint hyperedges (restricted to vertices not
// in `excluded`), smallest first. Its size bounds every cover from below.
inline std::size_t packing_bound(const std::vector<VertexSet>& edges,
                                 std::vector<std::uint32_t> order, const VertexSet& excluded,
                                 std::size_t stop_at = std::numeric_limits<std::size_t>::max()) {
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return edges[a].count_without(excluded) < edges[b].count_without(excluded);
  });
  VertexSet used(excluded.universe());
  std::size_t packed = 0;
  for (auto i : order) {
    if (edges[i].intersects_without(used, excluded)) continue;
    used |= edges[i] - excluded;
    if (++packed >= stop_at) break;
  }
  return packed;
}

class BranchAndBound {
 public:
  BranchAndBound(const Hypergraph& h, const CoverOptions& opts, std::size_t upper_bound,
                 VertexSet incumbent)
      : edges_(h.edges()),
        universe_(h.universe()),
        opts_(opts),
        best_(upper_bound),
        witness_(std::move(incumbent)) {}

  void run() {
    Node root{VertexSet(universe_), VertexSet(universe_), 0, {}};
    root.open.resize(edges_.size());
    for (std::uint32_t i = 0; i < edges_.size(); ++i) root.open[i] = i;

    if (opts_.threads <= 1) {
      dfs(std::move(root));
      return;
    }
    auto children = expand(root);
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    const unsigned count = std::min<unsigned>(opts_.threads, static_cast<unsigned>(children.size()));
    for (unsigned t = 0; t < count; ++t)
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < children.size(); i = next++) dfs(std::move(children[i]));
      });
  }

  std::size_t best() const { return best_.load(); }
  const VertexSet& witness() const { return witness_; }
  bool aborted() const { return aborted_.load(); }
  std::uint64_t nodes() const { return std::min(nodes_.load(), opts_.node_budget); }

 private:
  struct Node {
    VertexSet chosen;
    VertexSet excluded;
    std::size_t count;
    std::vector<std::uint32_t> open;  // possibly-uncovered hyperedges, ascending
  };

  void dfs(Node node) {
    auto children = expand(node);
    for (auto& child : children) {
      if (aborted_.load(std::memory_order_relaxed)) return;
      dfs(std::move(child));
    }
  }

  std::vector<Node> expand(Node& node) {
    if (aborted_.load(std::memory_order_relaxed)) return {};
    if (nodes_.fetch_add(1, std::memory_order_relaxed) >= opts_.node_budget) {
      aborted_ = true;
      return {};
    }

    // Drop covered hyperedges; a hyperedge left with one admissible vertex forces it.
    for (bool forced = true; forced;) {
      forced = false;
      std::vector<std::uint32_t> still;
      still.reserve(node.open.size());
      for (auto i : node.open) {
        const VertexSet& e = edges_[i];
        if (e.intersects(node.chosen)) continue;
        const std::size_t left = e.count_without(node.excluded);
        if (left == 0) return {};
        if (left == 1) {
          node.chosen.insert((e - node.excluded).first());
          ++node.count;
          forced = true;
          continue;
        }
        still.push_back(i);
      }
      node.open = std::move(still);
      if (node.count >= best_.load()) return {};
    }

    if (node.open.empty()) {
      record(node);
      return {};
    }

    const std::size_t budget_left = best_.load() - node.count;
    if (packing_bound(edges_, node.open, node.excluded, budget_left) >= budget_left) return {};

    // Branch on a smallest uncovered hyperedge (first by index among ties).
    std::uint32_t pivot = node.open.front();
    std::size_t pivot_size = edges_[pivot].count_without(node.excluded);
    for (auto i : node.open) {
      const std::size_t s = edges_[i].count_without(node.excluded);
      if (s < pivot_size) {
        pivot = i;
        pivot_size = s;
      }
    }

    std::vector<Node> children;
    VertexSet excluded = node.excluded;
    (edges_[pivot] - node.excluded).for_each([&](Vertex v) {
      Node child{node.chosen, excluded, node.count + 1, node.open};
      child.chosen.insert(v);
      children.push_back(std::move(child));
      excluded.insert(v);
    });
    return children;
  }

  void record(const Node& node) {
    std::lock_guard lock(mutex_);
    if (node.count < best_.load()) {
      best_ = node.count;
      witness_ = node.chosen;
    }
  }

  const std::vector<VertexSet>& edges_;
  std::size_t universe_;
  CoverOptions opts_;
  std::atomic<std::size_t> best_;
  VertexSet witness_;
  std::mutex mutex_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> aborted_{false};
};

}  // namespace detail

// Lower bound on τ(h) from a greedy disjoint packing, smallest hyperedges first.
inline std::size_t disjoint_packing_bound(const Hypergraph& h) {
  std::vector<std::uint32_t> all(h.num_edges());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  return detail::packing_bound(h.edges(), std::move(all), VertexSet(h.universe()));
}

// Repeatedly takes the vertex hitting the most uncovered hyperedges (smallest
// id on ties). Flagged optimal only when it meets the packing bound.
inline CoverResult greedy_cover(const Hypergraph& h) {
  detail::require_no_empty_edge(h);
  CoverResult result{0, VertexSet(h.universe()), false, 0};
  std::vector<std::uint32_t> open(h.num_edges());
  for (std::uint32_t i = 0; i < open.size(); ++i) open[i] = i;
  std::vector<std::size_t> hits(h.universe());
  while (!open.empty()) {
    std::fill(hits.begin(), hits.end(), 0);
    for (auto i : open) h.edge(i).for_each([&](Vertex v) { ++hits[v]; });
    const auto pick = static_cast<Vertex>(std::max_element(hits.begin(), hits.end()) - hits.begin());
    result.witness.insert(pick);
    ++result.size;
    std::erase_if(open, [&](std::uint32_t i) { return h.edge(i).contains(pick); });
  }
  result.optimal = result.size == disjoint_packing_bound(h);
  return result;
}

// Exact covering number τ(h) by branch and bound over the non-redundant
// hyperedges. Exceeding the node budget yields the best cover found so far
// with optimal = false.
inline CoverResult min_cover(const Hypergraph& h, const CoverOptions& opts = {}) {
  detail::require_no_empty_edge(h);
  const Hypergraph reduced = remove_redundant(h);
  CoverResult greedy = greedy_cover(reduced);
  if (greedy.optimal) return greedy;

  detail::BranchAndBound search(reduced, opts, greedy.size, greedy.witness);
  search.run();
  return CoverResult{search.best(), search.witness(), !search.aborted(), search.nodes()};
}

}  // namespace sepcodes
