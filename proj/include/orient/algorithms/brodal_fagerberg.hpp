#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "orient/algorithm.hpp"
#include "orient/errors.hpp"

namespace orient {

// Fixed-bound variant: needs an upper bound alpha on the arboricity of every
// graph in the stream. Whenever a vertex exceeds the bound, all of its
// out-edges are reversed (dropping it to zero) and any neighbor pushed over
// the bound joins the work stack. With alpha >= 2 * arboricity the cascade
// provably settles; below that it can thrash, so each update carries a flip
// budget of budget_factor * (m + n) and reports exhaustion instead of
// spinning forever.
class BrodalFagerbergOrientation final : public AdjacencyOrientationBase {
 public:
  static constexpr std::uint64_t kDefaultBudgetFactor = 50;

  BrodalFagerbergOrientation(std::size_t n, Degree alpha_bound,
                             std::uint64_t budget_factor = kDefaultBudgetFactor)
      : AdjacencyOrientationBase(n),
        alpha_(alpha_bound),
        budget_factor_(budget_factor) {}

  void insert(VertexId u, VertexId v) override {
    graph_.insert_oriented(u, v);
    if (graph_.out_degree(u) <= alpha_) return;
    const std::uint64_t budget =
        budget_factor_ * (graph_.edge_count() + graph_.vertex_count());
    std::uint64_t spent = 0;
    stack_.assign(1, u);
    while (!stack_.empty()) {
      const VertexId w = stack_.back();
      stack_.pop_back();
      if (graph_.out_degree(w) <= alpha_) continue;
      while (graph_.out_degree(w) > 0) {
        if (++spent > budget) throw BudgetExceededError(spent - 1);
        const VertexId x =
            graph_.reverse_arc(w, graph_.out_degree(w) - 1);
        ++flips_;
        if (graph_.out_degree(x) > alpha_) stack_.push_back(x);
      }
    }
  }

  Degree alpha_bound() const { return alpha_; }

 private:
  Degree alpha_;
  std::uint64_t budget_factor_;
  std::vector<VertexId> stack_;
};

// Adaptive variant: starts from alpha = 1 and learns the bound. Every
// insertion banks alpha + 1 reorientation credits; every flip spends one.
// When a cascade runs out of credit it aborts (the orientation stays
// consistent, only the degree bound may be violated), the bound grows to
// ceil(beta * alpha) — strictly, so beta close to 1 still makes progress —
// and the current edges are replayed from scratch under the new bound.
// A replay that runs dry bumps the bound again and restarts.
class AdaptiveBrodalFagerbergOrientation final
    : public AdjacencyOrientationBase {
 public:
  AdaptiveBrodalFagerbergOrientation(std::size_t n, double beta)
      : AdjacencyOrientationBase(n), beta_(beta) {}

  void insert(VertexId u, VertexId v) override {
    graph_.insert_oriented(u, v);
    credits_ += alpha_ + 1;
    if (!try_cascade(u)) rebuild();
  }

  Degree alpha_bound() const { return alpha_; }
  std::uint64_t rebuild_count() const { return rebuilds_; }

  static Degree next_alpha_bound(Degree alpha, double beta) {
    const auto next = Degree(std::ceil(beta * double(alpha)));
    return next > alpha ? next : alpha + 1;
  }

 private:
  // False when the credit pool ran dry mid-cascade.
  bool try_cascade(VertexId start) {
    if (graph_.out_degree(start) <= alpha_) return true;
    stack_.assign(1, start);
    while (!stack_.empty()) {
      const VertexId w = stack_.back();
      stack_.pop_back();
      if (graph_.out_degree(w) <= alpha_) continue;
      while (graph_.out_degree(w) > 0) {
        if (credits_ == 0) return false;
        --credits_;
        const VertexId x =
            graph_.reverse_arc(w, graph_.out_degree(w) - 1);
        ++flips_;
        if (graph_.out_degree(x) > alpha_) stack_.push_back(x);
      }
    }
    return true;
  }

  void rebuild() {
    // The undirected edge set is unchanged by cascades, so one snapshot
    // serves every retry; only the replayed orientations differ.
    const std::vector<Arc> snapshot = graph_.arcs();
    for (;;) {
      ++rebuilds_;
      alpha_ = next_alpha_bound(alpha_, beta_);
      graph_.clear();
      credits_ = 0;
      bool replay_ok = true;
      for (const Arc& a : snapshot) {
        graph_.insert_oriented(a.from, a.to);
        credits_ += alpha_ + 1;
        if (!try_cascade(a.from)) {
          replay_ok = false;
          break;
        }
      }
      if (replay_ok) return;
    }
  }

  double beta_;
  Degree alpha_ = 1;
  std::uint64_t credits_ = 0;
  std::uint64_t rebuilds_ = 0;
  std::vector<VertexId> stack_;
};

}  // namespace orient
