#pragma once

#include <cstdint>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/oriented_graph.hpp"
#include "orient/types.hpp"

namespace orient {

enum class AlgorithmKind {
  Naive,
  BfsPath,
  RandomPath,
  DescendingDegrees,
  KFlips,
  BrodalFagerberg,
  BrodalFagerbergAdaptive,
};

// Parameters for one algorithm instance. Only the fields of the selected
// kind matter; the rest are ignored.
struct AlgorithmConfig {
  AlgorithmKind kind = AlgorithmKind::Naive;
  unsigned depth = 1;             // d: search depth (BfsPath, RandomPath)
  unsigned walk_repeats = 1;      // r: walks per insertion (RandomPath)
  unsigned flips_per_update = 1;  // k: flips per update (KFlips)
  double beta = 2.0;              // bound growth factor (adaptive BF)
  std::optional<Degree> alpha_bound;  // fixed bound (static BF)
  std::uint64_t seed = 1;         // RandomPath only

  void validate() const {
    switch (kind) {
      case AlgorithmKind::BfsPath:
        require(depth >= 1, "depth must be >= 1");
        break;
      case AlgorithmKind::RandomPath:
        require(depth >= 1, "depth must be >= 1");
        require(walk_repeats >= 1, "walk repeats must be >= 1");
        break;
      case AlgorithmKind::KFlips:
        require(flips_per_update >= 1, "flips per update must be >= 1");
        break;
      case AlgorithmKind::BrodalFagerberg:
        require(alpha_bound.has_value() && *alpha_bound >= 1,
                "static variant needs an arboricity bound >= 1");
        break;
      case AlgorithmKind::BrodalFagerbergAdaptive:
        require(beta > 1.0 && beta <= 2.0, "beta must be in (1, 2]");
        break;
      default:
        break;
    }
  }

  std::string label() const {
    switch (kind) {
      case AlgorithmKind::Naive:
        return "naive";
      case AlgorithmKind::BfsPath:
        return "bfs_d" + std::to_string(depth);
      case AlgorithmKind::RandomPath:
        return "rpath_d" + std::to_string(depth) + "_r" +
               std::to_string(walk_repeats);
      case AlgorithmKind::DescendingDegrees:
        return "descdeg";
      case AlgorithmKind::KFlips:
        return "kflips_k" + std::to_string(flips_per_update);
      case AlgorithmKind::BrodalFagerberg:
        return "bf_a" + std::to_string(alpha_bound.value_or(0));
      case AlgorithmKind::BrodalFagerbergAdaptive: {
        char buf[32];
        std::snprintf(buf, sizeof buf, "bfa_b%g", beta);
        return buf;
      }
    }
    return "unknown";
  }

 private:
  static void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  }
};

// Common update interface of every orientation strategy.
class OrientationAlgorithm {
 public:
  virtual ~OrientationAlgorithm() = default;

  virtual void insert(VertexId u, VertexId v) = 0;
  virtual void erase(VertexId u, VertexId v) = 0;
  virtual bool adjacent(VertexId u, VertexId v) const = 0;
  virtual Degree current_delta() const = 0;
  virtual Degree out_degree(VertexId v) const = 0;

  virtual std::size_t vertex_count() const = 0;
  virtual std::size_t edge_count() const = 0;
  // Total single-edge reorientations performed so far.
  virtual std::uint64_t flip_count() const = 0;
  virtual std::vector<Arc> arcs() const = 0;
};

// Shared base for the strategies that keep the orientation in adjacency
// arrays. Deletion and queries delegate to the graph; only insertion policy
// differs per strategy.
class AdjacencyOrientationBase : public OrientationAlgorithm {
 public:
  void erase(VertexId u, VertexId v) override { graph_.delete_edge(u, v); }
  bool adjacent(VertexId u, VertexId v) const override {
    return graph_.adjacent(u, v);
  }
  Degree current_delta() const override { return graph_.max_out_degree(); }
  Degree out_degree(VertexId v) const override { return graph_.out_degree(v); }
  std::size_t vertex_count() const override { return graph_.vertex_count(); }
  std::size_t edge_count() const override { return graph_.edge_count(); }
  std::uint64_t flip_count() const override { return flips_; }
  std::vector<Arc> arcs() const override { return graph_.arcs(); }

  const OrientedGraph& graph() const { return graph_; }

 protected:
  explicit AdjacencyOrientationBase(std::size_t n) : graph_(n) {}

  // Pruning guard: skip rebalancing when the freshly assigned edge did not
  // create a new maximum, or when the maximum is already the best possible
  // value for a nonempty graph. The tracker reflects the post-insert state.
  bool skip_rebalance(VertexId u) const {
    const Degree delta = graph_.max_out_degree();
    return graph_.out_degree(u) < delta || delta == 1;
  }

  OrientedGraph graph_;
  std::uint64_t flips_ = 0;
};

}  // namespace orient
