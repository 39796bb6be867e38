#pragma once

#include "orient/algorithm.hpp"

namespace orient {

// Orients each new edge from the endpoint with the smaller out-degree and
// never reorients anything. Ties go to the first endpoint of the update.
class NaiveOrientation final : public AdjacencyOrientationBase {
 public:
  explicit NaiveOrientation(std::size_t n) : AdjacencyOrientationBase(n) {}

  void insert(VertexId u, VertexId v) override {
    if (graph_.out_degree(v) < graph_.out_degree(u))
      graph_.insert_oriented(v, u);
    else
      graph_.insert_oriented(u, v);
  }
};

}  // namespace orient
