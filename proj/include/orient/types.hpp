#pragma once

#include <cstdint>
#include <tuple>

namespace orient {

// Vertices are dense indices in [0, n); n is fixed when a structure is built.
using VertexId = std::uint32_t;
using Degree = std::uint32_t;

// A stored orientation of one undirected edge: held in `from`'s out-list.
struct Arc {
  VertexId from = 0;
  VertexId to = 0;

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.from == b.from && a.to == b.to;
  }
  friend bool operator<(const Arc& a, const Arc& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  }
};

// Unordered-pair key used for duplicate detection and edge indexing.
inline std::uint64_t edge_key(VertexId u, VertexId v) {
  const VertexId a = u < v ? u : v;
  const VertexId b = u < v ? v : u;
  return (std::uint64_t(a) << 32) | b;
}

}  // namespace orient
