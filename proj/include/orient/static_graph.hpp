#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "orient/types.hpp"

namespace orient {

// Immutable simple undirected graph: n vertices, distinct unordered pairs,
// no self-loops. Producers (parsers, generators) enforce the invariants.
struct StaticGraph {
  std::size_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> edges;

  std::size_t edge_count() const { return edges.size(); }

  Degree max_degree() const {
    std::vector<Degree> deg(n, 0);
    Degree best = 0;
    for (const auto& [u, v] : edges) {
      best = std::max(best, ++deg[u]);
      best = std::max(best, ++deg[v]);
    }
    return best;
  }
};

}  // namespace orient
