#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace orient {

// Dinic's algorithm on an explicit residual network. Exact integral flows;
// plenty fast for the unit-capacity feasibility networks built here.
class MaxFlowNetwork {
 public:
  explicit MaxFlowNetwork(std::size_t nodes)
      : adj_(nodes), level_(nodes), iter_(nodes) {}

  // Adds from->to with capacity cap plus its zero-capacity reverse arc.
  // Returns an id usable with flow_on().
  std::size_t add_edge(std::size_t from, std::size_t to, std::int64_t cap) {
    const std::size_t id = edges_.size();
    adj_[from].push_back(id);
    edges_.push_back({to, cap});
    adj_[to].push_back(id + 1);
    edges_.push_back({from, 0});
    return id;
  }

  std::int64_t max_flow(std::size_t s, std::size_t t) {
    std::int64_t total = 0;
    while (build_levels(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (std::int64_t pushed = augment(s, t, kInf)) total += pushed;
    }
    return total;
  }

  // Flow carried by edge `id` = capacity accumulated on its reverse arc.
  std::int64_t flow_on(std::size_t id) const { return edges_[id ^ 1].cap; }

 private:
  static constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

  struct EdgeRec {
    std::size_t to;
    std::int64_t cap;
  };

  bool build_levels(std::size_t s, std::size_t t) {
    level_.assign(adj_.size(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const std::size_t x = queue_[qi];
      for (std::size_t id : adj_[x]) {
        const EdgeRec& e = edges_[id];
        if (e.cap > 0 && level_[e.to] < 0) {
          level_[e.to] = level_[x] + 1;
          queue_.push_back(e.to);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t augment(std::size_t x, std::size_t t, std::int64_t limit) {
    if (x == t) return limit;
    for (std::size_t& i = iter_[x]; i < adj_[x].size(); ++i) {
      const std::size_t id = adj_[x][i];
      EdgeRec& e = edges_[id];
      if (e.cap <= 0 || level_[e.to] != level_[x] + 1) continue;
      const std::int64_t pushed =
          augment(e.to, t, limit < e.cap ? limit : e.cap);
      if (pushed > 0) {
        e.cap -= pushed;
        edges_[id ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<EdgeRec> edges_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> iter_;
  std::vector<std::size_t> queue_;
};

}  // namespace orient
