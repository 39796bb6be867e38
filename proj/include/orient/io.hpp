#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "orient/errors.hpp"
#include "orient/rng.hpp"
#include "orient/static_graph.hpp"
#include "orient/types.hpp"

namespace orient {

enum class EditKind { Insert, Delete };

struct EditOp {
  EditKind kind = EditKind::Insert;
  VertexId u = 0;
  VertexId v = 0;

  friend bool operator==(const EditOp& a, const EditOp& b) {
    return a.kind == b.kind && a.u == b.u && a.v == b.v;
  }
};

// An ordered stream of single-edge updates over a fixed vertex set.
// Normalized form: replaying against an empty edge set never inserts a
// present edge nor deletes an absent one.
struct EditSequence {
  std::size_t n = 0;
  std::vector<EditOp> ops;
  std::string provenance;
};

struct NormalizationReport {
  std::size_t kept = 0;
  std::size_t self_loops = 0;
  std::size_t duplicate_inserts = 0;
  std::size_t obsolete_deletes = 0;

  std::size_t dropped() const {
    return self_loops + duplicate_inserts + obsolete_deletes;
  }

  // key:value lines, one per counter.
  std::string to_kv() const {
    std::ostringstream os;
    os << "kept_updates:" << kept << '\n'
       << "dropped_self_loops:" << self_loops << '\n'
       << "dropped_duplicate_inserts:" << duplicate_inserts << '\n'
       << "dropped_obsolete_deletes:" << obsolete_deletes << '\n';
    return os.str();
  }
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

inline VertexId parse_vertex(const std::string& tok, const std::string& source,
                             std::size_t line) {
  if (!tok.empty() && tok[0] == '-') throw NegativeVertexError(source, line);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(source, line, "expected a vertex id, got '" + tok + "'");
  }
  if (used != tok.size())
    throw ParseError(source, line, "expected a vertex id, got '" + tok + "'");
  if (value > 0xffffffffULL)
    throw ParseError(source, line, "vertex id " + tok + " too large");
  return VertexId(value);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Edits format: optional header "n <N>", then one update per line,
// "+ u v" or "- u v". '#' starts a comment; blank lines are ignored.
// Vertex ids are 0-based. Without a header, n is 1 + the largest id seen.
// ---------------------------------------------------------------------------

inline EditSequence parse_edits(std::istream& in,
                                const std::string& source = "<edits>") {
  EditSequence seq;
  seq.provenance = source;
  bool have_header = false;
  bool saw_content = false;
  VertexId max_id = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string body = detail::strip_comment(line);
    if (detail::blank(body)) continue;
    std::istringstream ls(body);
    std::string head;
    ls >> head;
    if (!saw_content && head == "n") {
      std::string ntok, extra;
      if (!(ls >> ntok) || (ls >> extra))
        throw ParseError(source, lineno, "header must be exactly 'n <N>'");
      seq.n = detail::parse_vertex(ntok, source, lineno);
      have_header = true;
      saw_content = true;
      continue;
    }
    saw_content = true;
    if (head != "+" && head != "-")
      throw ParseError(source, lineno,
                       "expected '+' or '-', got '" + head + "'");
    std::string utok, vtok, extra;
    if (!(ls >> utok >> vtok))
      throw ParseError(source, lineno, "expected two vertex ids");
    if (ls >> extra)
      throw ParseError(source, lineno, "trailing token '" + extra + "'");
    EditOp op;
    op.kind = head == "+" ? EditKind::Insert : EditKind::Delete;
    op.u = detail::parse_vertex(utok, source, lineno);
    op.v = detail::parse_vertex(vtok, source, lineno);
    if (have_header && (op.u >= seq.n || op.v >= seq.n))
      throw ParseError(source, lineno, "vertex id beyond declared n");
    max_id = std::max({max_id, op.u, op.v});
    seq.ops.push_back(op);
  }
  if (!have_header) seq.n = seq.ops.empty() ? 0 : std::size_t(max_id) + 1;
  return seq;
}

inline EditSequence parse_edits_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_edits(in, path);
}

inline void write_edits(const EditSequence& seq, std::ostream& out) {
  out << "n " << seq.n << '\n';
  for (const EditOp& op : seq.ops)
    out << (op.kind == EditKind::Insert ? '+' : '-') << ' ' << op.u << ' '
        << op.v << '\n';
}

inline void write_edits_file(const EditSequence& seq, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_edits(seq, out);
}

// ---------------------------------------------------------------------------
// METIS graph format. Header "n m [fmt [ncon]]"; then n data lines, the i-th
// listing the (1-based) neighbors of vertex i, shifted to 0-based on read.
// '%' lines are comments. Weights are parsed past and ignored; self-loops
// and repeated edges are dropped.
// ---------------------------------------------------------------------------

inline StaticGraph parse_metis(std::istream& in,
                               const std::string& source = "<metis>") {
  std::string line;
  std::size_t lineno = 0;

  auto next_data_line = [&](std::string& out_line) {
    while (std::getline(in, out_line)) {
      ++lineno;
      if (!out_line.empty() && out_line[0] == '%') continue;
      return true;
    }
    return false;
  };

  std::string header;
  // The header must be a non-blank line; blank lines later mean isolated
  // vertices, so only comments are skipped once vertex lines begin.
  do {
    if (!next_data_line(header))
      throw ParseError(source, lineno, "missing header line");
  } while (detail::blank(header));

  std::istringstream hs(header);
  unsigned long long n = 0, m = 0;
  std::string fmt;
  unsigned long long ncon = 0;
  if (!(hs >> n >> m))
    throw ParseError(source, lineno, "header must start with 'n m'");
  bool has_edge_weights = false, has_vertex_weights = false,
       has_vertex_sizes = false;
  if (hs >> fmt) {
    if (fmt.find_first_not_of("01") != std::string::npos || fmt.size() > 3)
      throw ParseError(source, lineno, "bad fmt field '" + fmt + "'");
    const std::string padded = std::string(3 - fmt.size(), '0') + fmt;
    has_vertex_sizes = padded[0] == '1';
    has_vertex_weights = padded[1] == '1';
    has_edge_weights = padded[2] == '1';
    if (hs >> ncon) {
      // ncon vertex weights per line
    } else {
      ncon = has_vertex_weights ? 1 : 0;
    }
  }
  if (has_vertex_weights && ncon == 0) ncon = 1;

  StaticGraph g;
  g.n = std::size_t(n);
  std::unordered_set<std::uint64_t> seen;
  for (unsigned long long v = 1; v <= n; ++v) {
    if (!next_data_line(line))
      throw ParseError(source, lineno,
                       "expected " + std::to_string(n) + " vertex lines, got " +
                           std::to_string(v - 1));
    std::istringstream ls(line);
    long long tok = 0;
    if (has_vertex_sizes && !(ls >> tok))
      throw ParseError(source, lineno, "missing vertex size");
    for (unsigned long long c = 0; c < ncon; ++c)
      if (!(ls >> tok))
        throw ParseError(source, lineno, "missing vertex weight");
    long long nb = 0;
    while (ls >> nb) {
      if (nb < 1 || (unsigned long long)nb > n)
        throw ParseError(source, lineno,
                         "neighbor " + std::to_string(nb) + " out of range");
      if (has_edge_weights && !(ls >> tok))
        throw ParseError(source, lineno, "missing edge weight");
      if ((unsigned long long)nb == v) continue;  // self-loop
      const VertexId a = VertexId(v - 1);
      const VertexId b = VertexId(nb - 1);
      if (seen.insert(edge_key(a, b)).second) g.edges.emplace_back(a, b);
    }
    if (ls.fail() && !ls.eof())
      throw ParseError(source, lineno, "malformed vertex line");
  }
  return g;
}

inline StaticGraph parse_metis_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return parse_metis(in, path);
}

inline void write_metis(const StaticGraph& g, std::ostream& out) {
  std::vector<std::vector<VertexId>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  out << g.n << ' ' << g.edges.size() << '\n';
  for (std::size_t v = 0; v < g.n; ++v) {
    for (std::size_t i = 0; i < adj[v].size(); ++i) {
      if (i) out << ' ';
      out << adj[v][i] + 1;
    }
    out << '\n';
  }
}

inline void write_metis_file(const StaticGraph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_metis(g, out);
}

// ---------------------------------------------------------------------------
// Normalization and stream building.
// ---------------------------------------------------------------------------

// Drops self-loops, inserts of present edges and deletes of absent ones,
// tracked against a shadow edge set. Idempotent.
inline std::pair<EditSequence, NormalizationReport> normalize(
    const EditSequence& seq) {
  EditSequence out;
  out.n = seq.n;
  out.provenance = seq.provenance;
  NormalizationReport report;
  std::unordered_set<std::uint64_t> present;
  for (const EditOp& op : seq.ops) {
    if (op.u == op.v) {
      ++report.self_loops;
      continue;
    }
    const std::uint64_t key = edge_key(op.u, op.v);
    if (op.kind == EditKind::Insert) {
      if (!present.insert(key).second) {
        ++report.duplicate_inserts;
        continue;
      }
    } else {
      if (present.erase(key) == 0) {
        ++report.obsolete_deletes;
        continue;
      }
    }
    out.ops.push_back(op);
    ++report.kept;
  }
  return {std::move(out), report};
}

// All edges of g as insertions in a seeded uniform random order.
// Fisher-Yates from the back: position i-1 swaps with below(i), descending.
inline EditSequence static_to_stream(const StaticGraph& g, std::uint64_t seed) {
  EditSequence seq;
  seq.n = g.n;
  seq.provenance = "static_to_stream(seed=" + std::to_string(seed) + ")";
  std::vector<std::size_t> perm(g.edges.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Rng rng(seed);
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[rng.below(i)]);
  seq.ops.reserve(perm.size());
  for (std::size_t idx : perm)
    seq.ops.push_back({EditKind::Insert, g.edges[idx].first,
                       g.edges[idx].second});
  return seq;
}

// Uniform simple graph with exactly m edges via rejection sampling.
inline StaticGraph gen_random_graph(std::size_t n, std::size_t m,
                                    std::uint64_t seed) {
  const std::uint64_t max_edges =
      n < 2 ? 0 : std::uint64_t(n) * (n - 1) / 2;
  if (m > max_edges)
    throw TooDenseError("cannot place " + std::to_string(m) + " edges on " +
                        std::to_string(n) + " vertices");
  StaticGraph g;
  g.n = n;
  g.edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m * 2);
  Rng rng(seed);
  while (g.edges.size() < m) {
    const VertexId u = VertexId(rng.below(n));
    const VertexId v = VertexId(rng.below(n));
    if (u == v) continue;
    const VertexId a = u < v ? u : v;
    const VertexId b = u < v ? v : u;
    if (seen.insert(edge_key(a, b)).second) g.edges.emplace_back(a, b);
  }
  return g;
}

// Final edge set after replaying ops with skip-obsolete semantics.
// Deterministic edge order (insertion order with swap-remove deletion).
inline StaticGraph replay_final_graph(const EditSequence& seq) {
  StaticGraph g;
  g.n = seq.n;
  std::unordered_map<std::uint64_t, std::size_t> pos;
  for (const EditOp& op : seq.ops) {
    if (op.u == op.v) continue;
    const std::uint64_t key = edge_key(op.u, op.v);
    if (op.kind == EditKind::Insert) {
      if (pos.count(key)) continue;
      pos.emplace(key, g.edges.size());
      g.edges.emplace_back(op.u, op.v);
    } else {
      const auto it = pos.find(key);
      if (it == pos.end()) continue;
      const std::size_t at = it->second;
      pos.erase(it);
      if (at + 1 != g.edges.size()) {
        g.edges[at] = g.edges.back();
        pos[edge_key(g.edges[at].first, g.edges[at].second)] = at;
      }
      g.edges.pop_back();
    }
  }
  return g;
}

}  // namespace orient
