#pragma once

#include "orient/algorithm.hpp"

namespace orient {

// Swaps the new edge toward the out-neighbor of smallest out-degree: if that
// neighbor sits at least two below the current vertex, the arc is reversed
// and the chain continues from there. The outer loop repeats while the swap
// at u itself keeps succeeding.
//
// Each swap moves an edge from a higher-degree vertex to one at least two
// lower, so the sum of squared out-degrees strictly drops and the process
// terminates. Argmin ties resolve to the smallest vertex id.
class DescendingDegreesOrientation final : public AdjacencyOrientationBase {
 public:
  explicit DescendingDegreesOrientation(std::size_t n)
      : AdjacencyOrientationBase(n) {}

  void insert(VertexId u, VertexId v) override {
    graph_.insert_oriented(u, v);
    if (skip_rebalance(u)) return;
    while (descend(u)) {
    }
  }

 private:
  // One chain of swaps starting at u; true iff the very first swap happened.
  bool descend(VertexId u) {
    bool first_swapped = false;
    VertexId cur = u;
    for (bool first = true;; first = false) {
      const auto& adj = graph_.out_neighbors(cur);
      if (adj.empty()) break;
      std::size_t best = 0;
      for (std::size_t s = 1; s < adj.size(); ++s) {
        const Degree ds = graph_.out_degree(adj[s]);
        const Degree db = graph_.out_degree(adj[best]);
        if (ds < db || (ds == db && adj[s] < adj[best])) best = s;
      }
      if (graph_.out_degree(adj[best]) + 1 >= graph_.out_degree(cur)) break;
      const VertexId w = graph_.reverse_arc(cur, best);
      ++flips_;
      if (first) first_swapped = true;
      cur = w;
    }
    return first_swapped;
  }
};

}  // namespace orient
