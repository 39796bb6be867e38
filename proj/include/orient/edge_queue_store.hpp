#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "orient/errors.hpp"
#include "orient/types.hpp"

namespace orient {

// Per-vertex FIFO queues of out-edges, with an unordered-pair handle index so
// an arbitrary named edge can be unlinked in O(1). Queues are intrusive
// doubly-linked lists over a pooled node array; surviving entries keep their
// insertion order, which is what makes the front pop a true FIFO.
class EdgeQueueStore {
 public:
  explicit EdgeQueueStore(std::size_t n)
      : head_(n, kNil), tail_(n, kNil), len_(n, 0) {}

  std::size_t vertex_count() const { return head_.size(); }
  std::size_t edge_count() const { return index_.size(); }
  Degree queue_length(VertexId v) const { return len_[v]; }

  bool contains(VertexId u, VertexId v) const {
    return index_.count(edge_key(u, v)) != 0;
  }

  // Appends (u,v) to the tail of Q_u. The undirected edge must be absent.
  void push(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoopError(u);
    auto [it, fresh] = index_.try_emplace(edge_key(u, v), kNil);
    if (!fresh) throw DuplicateEdgeError(u, v);
    const std::int32_t id = alloc(u, v);
    it->second = id;
    link_back(u, id);
    ++len_[u];
  }

  // Unlinks {u,v} from whichever queue holds it; returns the holder.
  VertexId remove(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    auto it = index_.find(edge_key(u, v));
    if (it == index_.end()) throw MissingEdgeError(u, v);
    const std::int32_t id = it->second;
    const VertexId holder = pool_[id].from;
    unlink(holder, id);
    --len_[holder];
    index_.erase(it);
    free_list_.push_back(id);
    return holder;
  }

  // Moves the FIFO-front edge (x,y) of Q_x to the tail of Q_y as (y,x).
  // Q_x must be nonempty. Returns y.
  VertexId reverse_front(VertexId x) {
    assert(head_[x] != kNil);
    const std::int32_t id = head_[x];
    Node& nd = pool_[id];
    const VertexId y = nd.to;
    unlink(x, id);
    nd.from = y;
    nd.to = x;
    link_back(y, id);
    --len_[x];
    ++len_[y];
    return y;
  }

  // FIFO-front arc of Q_v, or {v,v} sentinel when empty (tests only).
  Arc front(VertexId v) const {
    if (head_[v] == kNil) return {v, v};
    const Node& nd = pool_[head_[v]];
    return {nd.from, nd.to};
  }

  // All queued arcs, per vertex in FIFO order. Deterministic given history.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(index_.size());
    for (std::size_t v = 0; v < head_.size(); ++v)
      for (std::int32_t id = head_[v]; id != kNil; id = pool_[id].next)
        out.push_back({pool_[id].from, pool_[id].to});
    return out;
  }

 private:
  static constexpr std::int32_t kNil = -1;

  struct Node {
    VertexId from, to;
    std::int32_t prev, next;
  };

  std::int32_t alloc(VertexId u, VertexId v) {
    if (!free_list_.empty()) {
      const std::int32_t id = free_list_.back();
      free_list_.pop_back();
      pool_[id] = {u, v, kNil, kNil};
      return id;
    }
    pool_.push_back({u, v, kNil, kNil});
    return std::int32_t(pool_.size() - 1);
  }

  void link_back(VertexId v, std::int32_t id) {
    Node& nd = pool_[id];
    nd.prev = tail_[v];
    nd.next = kNil;
    if (tail_[v] != kNil)
      pool_[tail_[v]].next = id;
    else
      head_[v] = id;
    tail_[v] = id;
  }

  void unlink(VertexId v, std::int32_t id) {
    Node& nd = pool_[id];
    if (nd.prev != kNil)
      pool_[nd.prev].next = nd.next;
    else
      head_[v] = nd.next;
    if (nd.next != kNil)
      pool_[nd.next].prev = nd.prev;
    else
      tail_[v] = nd.prev;
  }

  void check_vertex(VertexId v) const {
    if (v >= head_.size())
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range (n=" +
                              std::to_string(head_.size()) + ")");
  }

  std::vector<Node> pool_;
  std::vector<std::int32_t> free_list_;
  std::vector<std::int32_t> head_, tail_;
  std::vector<Degree> len_;
  std::unordered_map<std::uint64_t, std::int32_t> index_;
};

}  // namespace orient
