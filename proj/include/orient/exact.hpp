#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orient/errors.hpp"
#include "orient/max_flow.hpp"
#include "orient/static_graph.hpp"
#include "orient/types.hpp"

namespace orient {

// A minimum-max-out-degree orientation: phi is the optimum value, witness an
// orientation attaining it (one arc per input edge).
struct ExactResult {
  Degree phi = 0;
  std::vector<Arc> witness;
};

// Exhaustive reference: tries all 2^m orientations. Kept independent of the
// flow route so the two can validate each other on small graphs.
inline ExactResult brute_force_optimum(const StaticGraph& g) {
  const std::size_t m = g.edges.size();
  if (m > 25)
    throw TooLargeError("brute force limited to 25 edges, got " +
                        std::to_string(m));
  if (m == 0) return {0, {}};

  const Degree lower = Degree((m + g.n - 1) / g.n);
  std::vector<Degree> deg(g.n);
  Degree best_phi = Degree(m) + 1;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    std::fill(deg.begin(), deg.end(), 0);
    Degree worst = 0;
    for (std::size_t i = 0; i < m && worst < best_phi; ++i) {
      const auto& [u, v] = g.edges[i];
      const VertexId src = (mask >> i) & 1 ? v : u;
      if (++deg[src] > worst) worst = deg[src];
    }
    if (worst < best_phi) {
      best_phi = worst;
      best_mask = mask;
      if (best_phi == lower) break;
    }
  }

  ExactResult res{best_phi, {}};
  res.witness.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [u, v] = g.edges[i];
    res.witness.push_back((best_mask >> i) & 1 ? Arc{v, u} : Arc{u, v});
  }
  return res;
}

// Whether a c-orientation exists, and one if so. Flow reduction: a unit of
// flow per edge must reach the sink through one of its endpoints, and each
// vertex passes at most c units, so saturation of all m edge arcs is exactly
// the existence of an orientation with max out-degree <= c.
inline std::optional<std::vector<Arc>> feasible_orientation(
    const StaticGraph& g, Degree c) {
  const std::size_t m = g.edges.size();
  if (m == 0) return std::vector<Arc>{};

  const std::size_t source = 0;
  const std::size_t first_edge = 1;
  const std::size_t first_vertex = 1 + m;
  const std::size_t sink = 1 + m + g.n;
  MaxFlowNetwork net(sink + 1);

  std::vector<std::pair<std::size_t, std::size_t>> choice_arcs;
  choice_arcs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [u, v] = g.edges[i];
    net.add_edge(source, first_edge + i, 1);
    const std::size_t to_u = net.add_edge(first_edge + i, first_vertex + u, 1);
    const std::size_t to_v = net.add_edge(first_edge + i, first_vertex + v, 1);
    choice_arcs.emplace_back(to_u, to_v);
  }
  for (std::size_t v = 0; v < g.n; ++v)
    net.add_edge(first_vertex + v, sink, std::int64_t(c));

  if (net.max_flow(source, sink) != std::int64_t(m)) return std::nullopt;

  std::vector<Arc> witness;
  witness.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& [u, v] = g.edges[i];
    // Flow through an endpoint arc means that endpoint pays the out-degree.
    witness.push_back(net.flow_on(choice_arcs[i].first) > 0 ? Arc{u, v}
                                                            : Arc{v, u});
  }
  return witness;
}

inline bool feasible_delta(const StaticGraph& g, Degree c) {
  return feasible_orientation(g, c).has_value();
}

// Minimum achievable max out-degree via binary search over the feasibility
// predicate, between the density lower bound ceil(m/n) and the max degree.
inline ExactResult exact_optimum(const StaticGraph& g) {
  const std::size_t m = g.edges.size();
  if (m == 0) return {0, {}};
  Degree lo = Degree((m + g.n - 1) / g.n);
  Degree hi = g.max_degree();
  while (lo < hi) {
    const Degree mid = lo + (hi - lo) / 2;
    if (feasible_delta(g, mid))
      hi = mid;
    else
      lo = mid + 1;
  }
  auto witness = feasible_orientation(g, lo);
  return {lo, std::move(*witness)};
}

// Test hook: true iff `witness` orients every edge of g exactly once with
// max out-degree exactly phi.
inline bool witness_is_valid(const StaticGraph& g, const ExactResult& r) {
  if (r.witness.size() != g.edges.size()) return false;
  std::vector<Degree> deg(g.n, 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& [u, v] = g.edges[i];
    const Arc& a = r.witness[i];
    const bool forward = a.from == u && a.to == v;
    const bool backward = a.from == v && a.to == u;
    if (!forward && !backward) return false;
    ++deg[a.from];
  }
  Degree worst = 0;
  for (Degree d : deg) worst = worst < d ? d : worst;
  return worst == r.phi || (g.edges.empty() && r.phi == 0);
}

}  // namespace orient
