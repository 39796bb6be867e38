#pragma once

// Umbrella header: all orientation strategies plus the factory.

#include <memory>

#include "orient/algorithm.hpp"
#include "orient/algorithms/bfs_path.hpp"
#include "orient/algorithms/brodal_fagerberg.hpp"
#include "orient/algorithms/descending_degrees.hpp"
#include "orient/algorithms/k_flips.hpp"
#include "orient/algorithms/naive.hpp"
#include "orient/algorithms/random_path.hpp"

namespace orient {

inline std::unique_ptr<OrientationAlgorithm> make_algorithm(
    std::size_t n, const AlgorithmConfig& cfg) {
  cfg.validate();
  switch (cfg.kind) {
    case AlgorithmKind::Naive:
      return std::make_unique<NaiveOrientation>(n);
    case AlgorithmKind::BfsPath:
      return std::make_unique<BfsPathOrientation>(n, cfg.depth);
    case AlgorithmKind::RandomPath:
      return std::make_unique<RandomPathOrientation>(n, cfg.depth,
                                                     cfg.walk_repeats, cfg.seed);
    case AlgorithmKind::DescendingDegrees:
      return std::make_unique<DescendingDegreesOrientation>(n);
    case AlgorithmKind::KFlips:
      return std::make_unique<KFlipsOrientation>(n, cfg.flips_per_update);
    case AlgorithmKind::BrodalFagerberg:
      return std::make_unique<BrodalFagerbergOrientation>(n, *cfg.alpha_bound);
    case AlgorithmKind::BrodalFagerbergAdaptive:
      return std::make_unique<AdaptiveBrodalFagerbergOrientation>(n, cfg.beta);
  }
  return nullptr;
}

}  // namespace orient
