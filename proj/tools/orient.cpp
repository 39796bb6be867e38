// Benchmark CLI for the dynamic low-out-degree orientation library.
//
// Subcommands:
//   run      replay an update stream through one algorithm, emit results CSV
//   exact    minimum max-out-degree of a graph (flow-based solver)
//   convert  turn a METIS graph into a seeded random insertion stream
//   profile  performance-profile CSV from a results CSV
//   gen      seeded uniform random graph, written as METIS
//
// Exit codes: 0 ok, 1 usage, 2 parse/input error, 3 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orient/bench.hpp"
#include "orient/exact.hpp"
#include "orient/io.hpp"

namespace {

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  const std::size_t from = slash == std::string::npos ? 0 : slash + 1;
  const std::size_t dot = path.find_last_of('.');
  const std::size_t to = dot == std::string::npos || dot < from ? path.size() : dot;
  return path.substr(from, to - from);
}

bool is_edits_input(const std::string& path, const std::string& type) {
  if (type == "edits") return true;
  if (type == "metis") return false;
  return path.size() > 6 && path.substr(path.size() - 6) == ".edits";
}

orient::StaticGraph load_static(const std::string& path,
                                const std::string& type) {
  if (!is_edits_input(path, type)) return orient::parse_metis_file(path);
  const auto [seq, report] = orient::normalize(orient::parse_edits_file(path));
  return orient::replay_final_graph(seq);
}

struct RunOptions {
  std::string algo;
  unsigned depth = 1;
  unsigned reps = 1;
  unsigned k = 1;
  double beta = 2.0;
  std::int64_t alpha_bound = -1;
  std::string input;
  std::string input_type = "auto";
  std::uint64_t seed = 1;
  unsigned repetitions = 10;
  bool warmup = true;
  std::string out;
};

orient::AlgorithmConfig make_config(const RunOptions& opt) {
  orient::AlgorithmConfig cfg;
  if (opt.algo == "naive")
    cfg.kind = orient::AlgorithmKind::Naive;
  else if (opt.algo == "bfs")
    cfg.kind = orient::AlgorithmKind::BfsPath;
  else if (opt.algo == "rpath")
    cfg.kind = orient::AlgorithmKind::RandomPath;
  else if (opt.algo == "descdeg")
    cfg.kind = orient::AlgorithmKind::DescendingDegrees;
  else if (opt.algo == "kflips")
    cfg.kind = orient::AlgorithmKind::KFlips;
  else if (opt.algo == "bf")
    cfg.kind = orient::AlgorithmKind::BrodalFagerberg;
  else if (opt.algo == "bf-adaptive")
    cfg.kind = orient::AlgorithmKind::BrodalFagerbergAdaptive;
  else
    throw std::invalid_argument("unknown algorithm '" + opt.algo + "'");
  cfg.depth = opt.depth;
  cfg.walk_repeats = opt.reps;
  cfg.flips_per_update = opt.k;
  cfg.beta = opt.beta;
  if (opt.alpha_bound >= 0)
    cfg.alpha_bound = orient::Degree(opt.alpha_bound);
  cfg.seed = opt.seed;
  cfg.validate();
  return cfg;
}

int cmd_run(const RunOptions& opt) {
  const orient::AlgorithmConfig cfg = make_config(opt);

  orient::BenchInstance instance;
  instance.label = file_stem(opt.input);
  std::vector<std::string> metadata;
  if (is_edits_input(opt.input, opt.input_type)) {
    auto [seq, report] = orient::normalize(orient::parse_edits_file(opt.input));
    instance.stream = std::move(seq);
    std::cout << report.to_kv();
    std::istringstream kv(report.to_kv());
    for (std::string line; std::getline(kv, line);) metadata.push_back(line);
  } else {
    const orient::StaticGraph g = orient::parse_metis_file(opt.input);
    instance.stream = orient::static_to_stream(g, opt.seed);
  }
  metadata.push_back("source:" + opt.input);
  metadata.push_back("provenance:" + instance.stream.provenance);
  metadata.push_back("base_seed:" + std::to_string(opt.seed));
  metadata.push_back("repetitions:" + std::to_string(opt.repetitions));
  metadata.push_back(std::string("warmup:") + (opt.warmup ? "1" : "0"));
  metadata.push_back(
      "quality_aggregation:per-repetition final_delta recorded; downstream "
      "tools use the mean over repetitions");

  const auto records = orient::run_matrix({cfg}, {instance}, opt.repetitions,
                                          opt.seed, opt.warmup);

  std::ofstream out(opt.out);
  if (!out) throw orient::Error("cannot write " + opt.out);
  orient::write_results_csv(out, records, metadata);

  bool failed = false;
  std::size_t written = 0;
  for (const auto& r : records) {
    if (r.error.empty()) {
      ++written;
      continue;
    }
    failed = true;
    std::cerr << r.algorithm << " on " << r.instance << " rep " << r.repetition
              << ": " << r.error << '\n';
  }
  std::cout << "wrote " << opt.out << " (" << written << " records)\n";
  return failed ? 3 : 0;
}

int cmd_exact(const std::string& input, const std::string& type,
              const std::string& witness_path) {
  const orient::StaticGraph g = load_static(input, type);
  const orient::ExactResult res = orient::exact_optimum(g);
  std::cout << "n=" << g.n << '\n'
            << "m=" << g.edges.size() << '\n'
            << "phi=" << res.phi << '\n';
  if (!witness_path.empty()) {
    std::ofstream out(witness_path);
    if (!out) throw orient::Error("cannot write " + witness_path);
    for (const orient::Arc& a : res.witness)
      out << a.from << ' ' << a.to << '\n';
  }
  return 0;
}

int cmd_convert(const std::string& input, std::uint64_t seed,
                const std::string& out_path) {
  const orient::StaticGraph g = orient::parse_metis_file(input);
  orient::write_edits_file(orient::static_to_stream(g, seed), out_path);
  std::cout << "wrote " << out_path << " (" << g.edges.size()
            << " insertions)\n";
  return 0;
}

int cmd_profile(const std::string& results_path, const std::string& metric,
                const std::string& out_path) {
  std::ifstream in(results_path);
  if (!in) throw orient::ParseError(results_path, 0, "cannot open file");
  const auto records = orient::read_results_csv(in, results_path);
  const auto profiles = orient::performance_profile(
      records, metric == "time" ? orient::ProfileMetric::Time
                                : orient::ProfileMetric::Delta);
  std::ofstream out(out_path);
  if (!out) throw orient::Error("cannot write " + out_path);
  orient::write_profile_csv(out, profiles);
  std::cout << "wrote " << out_path << " (" << profiles.size()
            << " algorithms)\n";
  return 0;
}

int cmd_gen(std::uint64_t n, std::uint64_t m, std::uint64_t seed,
            const std::string& out_path) {
  orient::write_metis_file(orient::gen_random_graph(n, m, seed), out_path);
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dynamic low-out-degree edge orientation benchmark"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "replay a stream, emit results CSV");
  run->add_option("--algo", run_opt.algo, "algorithm")
      ->required()
      ->check(CLI::IsMember(
          {"naive", "bfs", "rpath", "descdeg", "kflips", "bf", "bf-adaptive"}));
  run->add_option("--depth", run_opt.depth, "search depth d (bfs, rpath)");
  run->add_option("--reps", run_opt.reps, "walks per insertion r (rpath)");
  run->add_option("--k", run_opt.k, "flips per update (kflips)");
  run->add_option("--beta", run_opt.beta, "bound growth factor (bf-adaptive)");
  run->add_option("--alpha-bound", run_opt.alpha_bound,
                  "arboricity bound (bf)");
  run->add_option("--input", run_opt.input, "instance file")->required();
  run->add_option("--input-type", run_opt.input_type, "metis|edits")
      ->check(CLI::IsMember({"auto", "metis", "edits"}));
  run->add_option("--seed", run_opt.seed, "base seed");
  run->add_option("--repetitions", run_opt.repetitions,
                  "timed repetitions per instance");
  run->add_flag("--warmup,!--no-warmup", run_opt.warmup,
                "run one discarded warm-up repetition (default on)");
  run->add_option("--out", run_opt.out, "results CSV path")->required();

  std::string exact_input, exact_type = "auto", exact_witness;
  CLI::App* exact = app.add_subcommand("exact", "minimum max-out-degree");
  exact->add_option("--input", exact_input, "instance file")->required();
  exact->add_option("--input-type", exact_type, "metis|edits")
      ->check(CLI::IsMember({"auto", "metis", "edits"}));
  exact->add_option("--witness", exact_witness,
                    "write an optimal orientation ('u v' per arc)");

  std::string conv_input, conv_out;
  std::uint64_t conv_seed = 1;
  CLI::App* convert =
      app.add_subcommand("convert", "METIS graph to random insertion stream");
  convert->add_option("--input", conv_input, "METIS file")->required();
  convert->add_option("--seed", conv_seed, "shuffle seed");
  convert->add_option("--out", conv_out, "edits file")->required();

  std::string prof_results, prof_metric = "delta", prof_out;
  CLI::App* profile =
      app.add_subcommand("profile", "performance profile from results CSV");
  profile->add_option("--results", prof_results, "results CSV")->required();
  profile->add_option("--metric", prof_metric, "delta|time")
      ->check(CLI::IsMember({"delta", "time"}));
  profile->add_option("--out", prof_out, "profile CSV path")->required();

  std::uint64_t gen_n = 0, gen_m = 0, gen_seed = 1;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "seeded uniform random graph");
  gen->add_option("--n", gen_n, "vertex count")->required();
  gen->add_option("--m", gen_m, "edge count")->required();
  gen->add_option("--seed", gen_seed, "sampling seed");
  gen->add_option("--out", gen_out, "METIS output path")->required();

  try {
    app.parse(argc, argv);
    if (run->parsed()) return cmd_run(run_opt);
    if (exact->parsed()) return cmd_exact(exact_input, exact_type, exact_witness);
    if (convert->parsed()) return cmd_convert(conv_input, conv_seed, conv_out);
    if (profile->parsed()) return cmd_profile(prof_results, prof_metric, prof_out);
    if (gen->parsed()) return cmd_gen(gen_n, gen_m, gen_seed, gen_out);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const orient::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const orient::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
