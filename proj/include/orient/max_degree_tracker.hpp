#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "orient/types.hpp"

namespace orient {

// Degree-indexed bucket queue over all vertices. Vertex v always sits in
// bucket degree(v); max_degree() is the index of the highest nonempty bucket.
// Degree changes are O(1) moves; the max pointer only rises by one per
// increase and is rescanned downward on decrease, which amortizes out.
class MaxDegreeTracker {
 public:
  explicit MaxDegreeTracker(std::size_t n)
      : degree_(n, 0), slot_(n, 0), buckets_(1) {
    auto& zero = buckets_[0];
    zero.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      zero[v] = VertexId(v);
      slot_[v] = std::uint32_t(v);
    }
  }

  std::size_t size() const { return degree_.size(); }
  Degree degree(VertexId v) const { return degree_[v]; }
  Degree max_degree() const { return max_ptr_; }

  void increase(VertexId v) {
    const Degree d = degree_[v];
    if (d + 1 >= buckets_.size()) buckets_.resize(d + 2);
    move(v, d, d + 1);
    degree_[v] = d + 1;
    if (d + 1 > max_ptr_) max_ptr_ = d + 1;
  }

  void decrease(VertexId v) {
    const Degree d = degree_[v];
    assert(d > 0);
    move(v, d, d - 1);
    degree_[v] = d - 1;
    while (max_ptr_ > 0 && buckets_[max_ptr_].empty()) --max_ptr_;
  }

  // Smallest-id vertex in the top bucket (deterministic pick of "a maximum
  // out-degree vertex"). Requires a nonempty tracker.
  VertexId min_id_max_vertex() const {
    const auto& b = buckets_[max_ptr_];
    assert(!b.empty());
    VertexId best = b[0];
    for (VertexId v : b)
      if (v < best) best = v;
    return best;
  }

  const std::vector<VertexId>& bucket(Degree d) const {
    static const std::vector<VertexId> kEmpty;
    return d < buckets_.size() ? buckets_[d] : kEmpty;
  }

 private:
  void move(VertexId v, Degree from, Degree to) {
    auto& src = buckets_[from];
    const std::uint32_t s = slot_[v];
    const VertexId last = src.back();
    src[s] = last;
    slot_[last] = s;
    src.pop_back();
    auto& dst = buckets_[to];
    slot_[v] = std::uint32_t(dst.size());
    dst.push_back(v);
  }

  std::vector<Degree> degree_;
  std::vector<std::uint32_t> slot_;  // position of v inside its bucket
  std::vector<std::vector<VertexId>> buckets_;
  Degree max_ptr_ = 0;
};

}  // namespace orient
