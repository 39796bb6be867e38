#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "orient/errors.hpp"
#include "orient/max_degree_tracker.hpp"
#include "orient/types.hpp"

namespace orient {

// A directed path v0..vk over the current orientation. slots[i] is the
// position of vertices[i+1] inside the out-list of vertices[i], recorded
// while searching, so the whole path flips in O(k) without rescans.
struct DirectedPath {
  std::vector<VertexId> vertices;
  std::vector<std::uint32_t> slots;

  std::size_t length() const { return slots.size(); }
};

// Adjacency-array store of an edge orientation: every undirected edge {u,v}
// lives in exactly one endpoint's out-list. Deletion swap-removes, so slot
// positions are stable only until the next mutation of the same list.
// Out-degrees and the global maximum are kept in a bucket tracker.
class OrientedGraph {
 public:
  explicit OrientedGraph(std::size_t n) : out_adj_(n), tracker_(n) {}

  std::size_t vertex_count() const { return out_adj_.size(); }
  std::size_t edge_count() const { return m_; }

  Degree out_degree(VertexId v) const { return tracker_.degree(v); }
  Degree max_out_degree() const { return tracker_.max_degree(); }

  const std::vector<VertexId>& out_neighbors(VertexId v) const {
    return out_adj_[v];
  }
  const MaxDegreeTracker& tracker() const { return tracker_; }

  // True iff {u,v} is stored in either direction. Scans both out-lists.
  bool adjacent(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    return find_slot(u, v) >= 0 || find_slot(v, u) >= 0;
  }

  // Stores the arc u->v. The undirected edge must be absent.
  void insert_oriented(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw SelfLoopError(u);
    if (find_slot(u, v) >= 0 || find_slot(v, u) >= 0)
      throw DuplicateEdgeError(u, v);
    out_adj_[u].push_back(v);
    tracker_.increase(u);
    ++m_;
  }

  // Removes {u,v} from whichever out-list holds it.
  void delete_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    std::ptrdiff_t s = find_slot(u, v);
    if (s >= 0) {
      remove_slot(u, std::size_t(s));
      return;
    }
    s = find_slot(v, u);
    if (s >= 0) {
      remove_slot(v, std::size_t(s));
      return;
    }
    throw MissingEdgeError(u, v);
  }

  // Reverses the arc out_adj[u][slot]; returns the new holder.
  VertexId reverse_arc(VertexId u, std::size_t slot) {
    const VertexId w = out_adj_[u][slot];
    swap_remove(u, slot);
    out_adj_[w].push_back(u);
    tracker_.decrease(u);
    tracker_.increase(w);
    return w;
  }

  // Reverses every arc of the path. Exactly two out-degrees change: the
  // start loses one, the end gains one. All slot hints are validated before
  // the first mutation, so a StalePathError leaves the graph untouched.
  void flip_path(const DirectedPath& p) {
    const std::size_t k = p.length();
    if (k == 0) return;
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId src = p.vertices[i];
      const auto& adj = out_adj_[src];
      if (p.slots[i] >= adj.size() || adj[p.slots[i]] != p.vertices[i + 1])
        throw StalePathError(src, p.vertices[i + 1]);
    }
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId src = p.vertices[i];
      const VertexId dst = p.vertices[i + 1];
      swap_remove(src, p.slots[i]);
      out_adj_[dst].push_back(src);
    }
    tracker_.decrease(p.vertices.front());
    tracker_.increase(p.vertices.back());
  }

  // All stored arcs in per-vertex list order. Deterministic given history.
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    out.reserve(m_);
    for (std::size_t v = 0; v < out_adj_.size(); ++v)
      for (VertexId w : out_adj_[v]) out.push_back({VertexId(v), w});
    return out;
  }

  // Drops every edge; the vertex set stays.
  void clear() {
    for (std::size_t v = 0; v < out_adj_.size(); ++v) {
      auto& adj = out_adj_[v];
      while (!adj.empty()) {
        adj.pop_back();
        tracker_.decrease(VertexId(v));
      }
    }
    m_ = 0;
  }

 private:
  std::ptrdiff_t find_slot(VertexId u, VertexId v) const {
    const auto& a = out_adj_[u];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] == v) return std::ptrdiff_t(i);
    return -1;
  }

  void swap_remove(VertexId u, std::size_t slot) {
    auto& a = out_adj_[u];
    a[slot] = a.back();
    a.pop_back();
  }

  void remove_slot(VertexId u, std::size_t slot) {
    swap_remove(u, slot);
    tracker_.decrease(u);
    --m_;
  }

  void check_vertex(VertexId v) const {
    if (v >= out_adj_.size())
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range (n=" +
                              std::to_string(out_adj_.size()) + ")");
  }

  std::vector<std::vector<VertexId>> out_adj_;
  MaxDegreeTracker tracker_;
  std::size_t m_ = 0;
};

}  // namespace orient
