#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "orient/algorithms.hpp"
#include "orient/errors.hpp"
#include "orient/io.hpp"
#include "orient/rng.hpp"
#include "orient/types.hpp"

namespace orient {

// One (algorithm, instance, repetition) cell. Timing covers only the update
// loop. An errored cell keeps whatever state the algorithm reached and the
// error text; it is reported but never serialized into results CSV.
struct BenchmarkRecord {
  std::string algorithm;
  std::string instance;
  unsigned repetition = 0;
  std::uint64_t seed = 0;
  Degree final_delta = 0;
  double total_time_s = 0.0;
  std::uint64_t flips = 0;
  std::size_t n = 0;
  std::size_t m_final = 0;
  std::string error;
};

struct ProfilePoint {
  double tau = 1.0;
  double fraction = 0.0;
};

enum class ProfileMetric { Delta, Time };

struct BenchInstance {
  std::string label;
  EditSequence stream;  // normalized
};

inline constexpr std::string_view kResultsCsvHeader =
    "algorithm,instance,repetition,seed,final_delta,total_time_s,flips,n,"
    "m_final";

namespace detail {

inline BenchmarkRecord run_cell(const AlgorithmConfig& base_config,
                                const BenchInstance& instance,
                                unsigned repetition, std::uint64_t seed) {
  AlgorithmConfig cfg = base_config;
  cfg.seed = seed;
  BenchmarkRecord rec;
  rec.algorithm = cfg.label();
  rec.instance = instance.label;
  rec.repetition = repetition;
  rec.seed = seed;
  rec.n = instance.stream.n;

  auto algo = make_algorithm(instance.stream.n, cfg);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    for (const EditOp& op : instance.stream.ops) {
      if (op.kind == EditKind::Insert)
        algo->insert(op.u, op.v);
      else
        algo->erase(op.u, op.v);
    }
  } catch (const Error& e) {
    rec.error = e.what();
  }
  const auto t1 = std::chrono::steady_clock::now();
  rec.total_time_s = std::chrono::duration<double>(t1 - t0).count();
  rec.final_delta = algo->current_delta();
  rec.flips = algo->flip_count();
  rec.m_final = algo->edge_count();
  return rec;
}

}  // namespace detail

// Runs every (config, instance, repetition) cell sequentially. Repetition i
// uses derive_seed(base_seed, i) for the algorithm rng, identical across
// configs and instances, so reruns with the same base seed reproduce every
// quality column exactly. With warmup, one extra repetition per cell pair is
// run first and discarded. Algorithm errors are carried per record, never
// aborting the rest of the matrix. Output is sorted by (algorithm label,
// instance label, repetition).
inline std::vector<BenchmarkRecord> run_matrix(
    const std::vector<AlgorithmConfig>& configs,
    const std::vector<BenchInstance>& instances, unsigned repetitions,
    std::uint64_t base_seed, bool warmup = true) {
  std::vector<BenchmarkRecord> out;
  out.reserve(configs.size() * instances.size() * repetitions);
  for (const AlgorithmConfig& cfg : configs) {
    for (const BenchInstance& instance : instances) {
      if (warmup)
        detail::run_cell(cfg, instance, 0, derive_seed(base_seed, 0));
      for (unsigned rep = 0; rep < repetitions; ++rep)
        out.push_back(
            detail::run_cell(cfg, instance, rep, derive_seed(base_seed, rep)));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const BenchmarkRecord& a, const BenchmarkRecord& b) {
              return std::tie(a.algorithm, a.instance, a.repetition) <
                     std::tie(b.algorithm, b.instance, b.repetition);
            });
  return out;
}

inline double geometric_mean(const std::vector<double>& values) {
  if (values.empty()) throw EmptyInputError("geometric mean of nothing");
  double log_sum = 0.0;
  for (double v : values) {
    if (v <= 0.0)
      throw std::invalid_argument("geometric mean needs positive values");
    log_sum += std::log(v);
  }
  return std::exp(log_sum / double(values.size()));
}

namespace detail {

// Per-(algorithm, instance) metric value: arithmetic mean over repetitions.
inline std::map<std::string, std::map<std::string, double>> cell_values(
    const std::vector<BenchmarkRecord>& records, ProfileMetric metric) {
  std::map<std::string, std::map<std::string, std::pair<double, std::size_t>>>
      sums;
  std::set<std::string> instances;
  for (const BenchmarkRecord& r : records) {
    if (!r.error.empty()) continue;
    auto& cell = sums[r.algorithm][r.instance];
    cell.first +=
        metric == ProfileMetric::Delta ? double(r.final_delta) : r.total_time_s;
    cell.second += 1;
    instances.insert(r.instance);
  }
  std::map<std::string, std::map<std::string, double>> values;
  for (auto& [algo, cells] : sums) {
    for (const std::string& instance : instances) {
      const auto it = cells.find(instance);
      if (it == cells.end()) throw MissingCellError(algo, instance);
      values[algo][instance] = it->second.first / double(it->second.second);
    }
  }
  return values;
}

}  // namespace detail

// Step functions "fraction of instances within factor tau of the best
// algorithm". One breakpoint per distinct ratio; a tau = 1 point is always
// present, so its fraction reads off the share of instances where the
// algorithm is (tied for) best. Instances whose best value is zero carry no
// usable ratio and are excluded.
inline std::map<std::string, std::vector<ProfilePoint>> performance_profile(
    const std::vector<BenchmarkRecord>& records, ProfileMetric metric) {
  const auto values = detail::cell_values(records, metric);
  if (values.empty()) return {};

  std::map<std::string, double> best;
  for (const auto& [algo, cells] : values)
    for (const auto& [instance, value] : cells) {
      auto [it, fresh] = best.try_emplace(instance, value);
      if (!fresh && value < it->second) it->second = value;
    }

  std::vector<std::string> usable;
  for (const auto& [instance, b] : best)
    if (b > 0.0) usable.push_back(instance);

  std::map<std::string, std::vector<ProfilePoint>> profiles;
  for (const auto& [algo, cells] : values) {
    std::vector<double> ratios;
    ratios.reserve(usable.size());
    for (const std::string& instance : usable)
      ratios.push_back(cells.at(instance) / best.at(instance));
    std::sort(ratios.begin(), ratios.end());

    std::vector<ProfilePoint>& points = profiles[algo];
    const double total = double(ratios.size());
    std::size_t i = 0;
    if (ratios.empty() || ratios[0] > 1.0) points.push_back({1.0, 0.0});
    while (i < ratios.size()) {
      std::size_t j = i;
      while (j < ratios.size() && ratios[j] == ratios[i]) ++j;
      points.push_back({ratios[i], double(j) / total});
      i = j;
    }
  }
  return profiles;
}

// Step-function evaluation: fraction at the last breakpoint <= tau.
inline double profile_value_at(const std::vector<ProfilePoint>& points,
                               double tau) {
  double frac = 0.0;
  for (const ProfilePoint& p : points) {
    if (p.tau > tau) break;
    frac = p.fraction;
  }
  return frac;
}

// Comparison of final quality against known optima. An instance counts as
// solved optimally only when every repetition landed on phi; the ratio is
// the geometric mean over instances of (mean final delta) / phi, skipping
// phi = 0 instances.
struct OptimumComparison {
  std::size_t instances = 0;
  std::size_t optimal = 0;
  double match_rate = 0.0;
  double mean_ratio = 1.0;
};

inline std::map<std::string, OptimumComparison> compare_to_optimum(
    const std::vector<BenchmarkRecord>& records,
    const std::map<std::string, Degree>& optimum_by_instance) {
  struct Cell {
    double sum = 0.0;
    std::size_t count = 0;
    bool all_match = true;
  };
  std::map<std::string, std::map<std::string, Cell>> cells;
  for (const BenchmarkRecord& r : records) {
    if (!r.error.empty()) continue;
    const auto it = optimum_by_instance.find(r.instance);
    if (it == optimum_by_instance.end()) continue;
    Cell& c = cells[r.algorithm][r.instance];
    c.sum += double(r.final_delta);
    c.count += 1;
    if (r.final_delta != it->second) c.all_match = false;
  }

  std::map<std::string, OptimumComparison> out;
  for (const auto& [algo, per_instance] : cells) {
    OptimumComparison cmp;
    std::vector<double> ratios;
    for (const auto& [instance, cell] : per_instance) {
      ++cmp.instances;
      if (cell.all_match) ++cmp.optimal;
      const Degree phi = optimum_by_instance.at(instance);
      if (phi > 0) ratios.push_back(cell.sum / double(cell.count) / phi);
    }
    cmp.match_rate =
        cmp.instances ? double(cmp.optimal) / double(cmp.instances) : 0.0;
    cmp.mean_ratio = ratios.empty() ? 1.0 : geometric_mean(ratios);
    out[algo] = cmp;
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSV. The results header is part of the tool contract; rows hold no commas.
// Metadata lines go in front as '# ' comments and are skipped on read.
// ---------------------------------------------------------------------------

inline void write_results_csv(std::ostream& out,
                              const std::vector<BenchmarkRecord>& records,
                              const std::vector<std::string>& metadata = {}) {
  for (const std::string& line : metadata) out << "# " << line << '\n';
  out << kResultsCsvHeader << '\n';
  char buf[64];
  for (const BenchmarkRecord& r : records) {
    if (!r.error.empty()) continue;
    std::snprintf(buf, sizeof buf, "%.9f", r.total_time_s);
    out << r.algorithm << ',' << r.instance << ',' << r.repetition << ','
        << r.seed << ',' << r.final_delta << ',' << buf << ',' << r.flips
        << ',' << r.n << ',' << r.m_final << '\n';
  }
}

inline std::vector<BenchmarkRecord> read_results_csv(
    std::istream& in, const std::string& source = "<results>") {
  std::vector<BenchmarkRecord> records;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kResultsCsvHeader)
        throw ParseError(source, lineno, "unexpected results header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 9)
      throw ParseError(source, lineno, "expected 9 fields");
    try {
      BenchmarkRecord r;
      r.algorithm = fields[0];
      r.instance = fields[1];
      r.repetition = unsigned(std::stoul(fields[2]));
      r.seed = std::stoull(fields[3]);
      r.final_delta = Degree(std::stoul(fields[4]));
      r.total_time_s = std::stod(fields[5]);
      r.flips = std::stoull(fields[6]);
      r.n = std::stoull(fields[7]);
      r.m_final = std::stoull(fields[8]);
      records.push_back(std::move(r));
    } catch (const std::exception&) {
      throw ParseError(source, lineno, "malformed record");
    }
  }
  if (!header_seen) throw ParseError(source, lineno, "missing results header");
  return records;
}

inline void write_profile_csv(
    std::ostream& out,
    const std::map<std::string, std::vector<ProfilePoint>>& profiles) {
  out << "algorithm,tau,fraction\n";
  char tau_buf[64], frac_buf[64];
  for (const auto& [algo, points] : profiles) {
    for (const ProfilePoint& p : points) {
      std::snprintf(tau_buf, sizeof tau_buf, "%.10g", p.tau);
      std::snprintf(frac_buf, sizeof frac_buf, "%.10g", p.fraction);
      out << algo << ',' << tau_buf << ',' << frac_buf << '\n';
    }
  }
}

}  // namespace orient
