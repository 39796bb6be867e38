#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "orient/algorithm.hpp"

namespace orient {

// Breadth-first improving path search. After assigning a new edge u->v that
// created a fresh maximum, a depth-limited BFS over oriented edges looks for
// the first vertex y with out_degree(y) < out_degree(u) - 1 and flips the
// u..y path, shifting one unit of out-degree from u to y.
//
// The first qualifying vertex in FIFO discovery order wins; within a depth
// level the adjacency-array scan order decides, so runs are deterministic
// given the update history.
class BfsPathOrientation final : public AdjacencyOrientationBase {
 public:
  BfsPathOrientation(std::size_t n, unsigned depth)
      : AdjacencyOrientationBase(n),
        depth_(depth),
        mark_(n, 0),
        parent_(n, 0),
        parent_slot_(n, 0),
        hops_(n, 0) {}

  void insert(VertexId u, VertexId v) override {
    graph_.insert_oriented(u, v);
    if (skip_rebalance(u)) return;

    const Degree du = graph_.out_degree(u);
    ++epoch_;
    mark_[u] = epoch_;
    hops_[u] = 0;
    queue_.clear();
    queue_.push_back(u);
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const VertexId x = queue_[qi];
      if (hops_[x] == depth_) continue;
      const auto& adj = graph_.out_neighbors(x);
      for (std::uint32_t s = 0; s < adj.size(); ++s) {
        const VertexId w = adj[s];
        if (mark_[w] == epoch_) continue;
        mark_[w] = epoch_;
        parent_[w] = x;
        parent_slot_[w] = s;
        hops_[w] = hops_[x] + 1;
        if (graph_.out_degree(w) + 1 < du) {
          flip_discovered_path(u, w);
          return;
        }
        queue_.push_back(w);
      }
    }
  }

 private:
  void flip_discovered_path(VertexId u, VertexId y) {
    path_.vertices.clear();
    path_.slots.clear();
    for (VertexId x = y; x != u; x = parent_[x]) {
      path_.vertices.push_back(x);
      path_.slots.push_back(parent_slot_[x]);
    }
    path_.vertices.push_back(u);
    std::reverse(path_.vertices.begin(), path_.vertices.end());
    std::reverse(path_.slots.begin(), path_.slots.end());
    graph_.flip_path(path_);
    flips_ += path_.length();
  }

  unsigned depth_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint64_t> mark_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> parent_slot_;
  std::vector<std::uint32_t> hops_;
  std::vector<VertexId> queue_;
  DirectedPath path_;
};

}  // namespace orient
