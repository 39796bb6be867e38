#pragma once

#include <cstdint>
#include <vector>

#include "orient/algorithm.hpp"
#include "orient/edge_queue_store.hpp"
#include "orient/max_degree_tracker.hpp"

namespace orient {

// Keeps out-edges in per-vertex FIFO queues instead of adjacency arrays.
// Every update (insert or delete) is followed by k flips, each reversing the
// FIFO-front edge of a current maximum-out-degree vertex — the smallest id in
// the top bucket, for reproducible runs. With no out-edges anywhere the flip
// phase is a no-op.
class KFlipsOrientation final : public OrientationAlgorithm {
 public:
  KFlipsOrientation(std::size_t n, unsigned k)
      : store_(n), tracker_(n), k_(k) {}

  void insert(VertexId u, VertexId v) override {
    store_.push(u, v);
    tracker_.increase(u);
    run_flips();
  }

  void erase(VertexId u, VertexId v) override {
    const VertexId holder = store_.remove(u, v);
    tracker_.decrease(holder);
    run_flips();
  }

  bool adjacent(VertexId u, VertexId v) const override {
    return store_.contains(u, v);
  }
  Degree current_delta() const override { return tracker_.max_degree(); }
  Degree out_degree(VertexId v) const override { return tracker_.degree(v); }
  std::size_t vertex_count() const override { return store_.vertex_count(); }
  std::size_t edge_count() const override { return store_.edge_count(); }
  std::uint64_t flip_count() const override { return flips_; }
  std::vector<Arc> arcs() const override { return store_.arcs(); }

  const EdgeQueueStore& store() const { return store_; }
  const MaxDegreeTracker& tracker() const { return tracker_; }

 private:
  void run_flips() {
    for (unsigned i = 0; i < k_; ++i) {
      if (tracker_.max_degree() == 0) break;  // nothing to pop
      const VertexId x = tracker_.min_id_max_vertex();
      const VertexId y = store_.reverse_front(x);
      tracker_.decrease(x);
      tracker_.increase(y);
      ++flips_;
    }
  }

  EdgeQueueStore store_;
  MaxDegreeTracker tracker_;
  unsigned k_;
  std::uint64_t flips_ = 0;
};

}  // namespace orient
