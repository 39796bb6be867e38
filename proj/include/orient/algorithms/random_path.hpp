#pragma once

#include <cstdint>
#include <vector>

#include "orient/algorithm.hpp"
#include "orient/rng.hpp"

namespace orient {

// Random improving walks. Under the same guard as the BFS variant, up to
// `repeats` walks of at most `depth` steps leave u over oriented edges; a
// walk stops and flips its path at the first vertex with out-degree below
// out_degree(u) - 1, or dies when every out-neighbor is already marked.
//
// Marks are epoch stamps cleared per walk, so every repeat explores
// independently. Pinned rng stream: one below(count) draw per step, with
// candidates collected in adjacency-array order.
class RandomPathOrientation final : public AdjacencyOrientationBase {
 public:
  RandomPathOrientation(std::size_t n, unsigned depth, unsigned repeats,
                        std::uint64_t seed)
      : AdjacencyOrientationBase(n),
        depth_(depth),
        repeats_(repeats),
        rng_(seed),
        mark_(n, 0) {}

  void insert(VertexId u, VertexId v) override {
    graph_.insert_oriented(u, v);
    if (skip_rebalance(u)) return;

    const Degree du = graph_.out_degree(u);
    for (unsigned rep = 0; rep < repeats_; ++rep)
      if (try_walk(u, du)) return;
  }

 private:
  bool try_walk(VertexId u, Degree du) {
    ++epoch_;
    mark_[u] = epoch_;
    path_.vertices.assign(1, u);
    path_.slots.clear();
    VertexId x = u;
    for (unsigned step = 0; step < depth_; ++step) {
      const auto& adj = graph_.out_neighbors(x);
      candidates_.clear();
      for (std::uint32_t s = 0; s < adj.size(); ++s)
        if (mark_[adj[s]] != epoch_) candidates_.push_back(s);
      if (candidates_.empty()) return false;  // dead end
      const std::uint32_t slot =
          candidates_[rng_.below(candidates_.size())];
      const VertexId w = adj[slot];
      path_.vertices.push_back(w);
      path_.slots.push_back(slot);
      mark_[w] = epoch_;
      if (graph_.out_degree(w) + 1 < du) {
        graph_.flip_path(path_);
        flips_ += path_.length();
        return true;
      }
      x = w;
    }
    return false;
  }

  unsigned depth_;
  unsigned repeats_;
  Rng rng_;
  std::uint64_t epoch_ = 0;
  std::vector<std::uint64_t> mark_;
  std::vector<std::uint32_t> candidates_;
  DirectedPath path_;
};

}  // namespace orient
