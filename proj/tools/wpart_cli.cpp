#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wpart/bench.h"
#include "wpart/generator.h"
#include "wpart/hgr_io.h"
#include "wpart/lpt.h"
#include "wpart/performance_profile.h"
#include "wpart/recursive_bipartitioning.h"

using json = nlohmann::json;
using namespace wpart;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

json report_json(const PipelineReport& r, const Hypergraph& hg, std::uint64_t seed) {
  return json{
      {"vertices", hg.num_vertices()},
      {"nets", hg.num_nets()},
      {"pins", hg.num_pins()},
      {"k", r.k},
      {"epsilon", r.epsilon},
      {"seed", seed},
      {"k_prime", r.k_prime},
      {"epsilon_hat", r.epsilon_hat},
      {"removed", r.removed},
      {"km1", r.objective},
      {"km1_reduced", r.objective_reduced},
      {"alpha", r.alpha},
      {"max_block_weight", r.max_block_weight},
      {"block_weights", r.block_weights},
      {"l_k", r.l_k},
      {"l_lpt", r.l_lpt},
      {"l_max", r.l_max},
      {"balanced", r.balanced},
      {"certified", r.certified},
      {"prepacking",
       {{"triggers", r.stats.prepacking_triggers},
        {"fixed_vertices", r.stats.fixed_vertices},
        {"triggered_vertices", r.stats.triggered_vertices},
        {"fixed_fraction", r.stats.fixed_fraction()},
        {"bipartitions", r.stats.bipartitions},
        {"fallbacks", r.stats.fallbacks}}},
      {"seconds", r.seconds},
  };
}

std::string report_csv(const json& j) {
  static const char* kColumns[] = {"vertices", "nets", "pins", "k", "epsilon", "seed", "k_prime",
                                   "epsilon_hat", "removed", "km1", "km1_reduced", "alpha",
                                   "max_block_weight", "l_k", "l_lpt", "l_max", "balanced",
                                   "certified", "seconds"};
  std::string head, row;
  for (const char* c : kColumns) {
    if (!head.empty()) {
      head += ',';
      row += ',';
    }
    head += c;
    row += j[c].dump();
  }
  for (const char* c : {"triggers", "fixed_vertices", "fixed_fraction", "bipartitions", "fallbacks"}) {
    head += std::string(",prepacking_") + c;
    row += "," + j["prepacking"][c].dump();
  }
  return head + "\n" + row + "\n";
}

struct PartitionArgs {
  std::string hypergraph, output, report = "json";
  BlockId k = 2;
  double epsilon = 0.03;
  std::uint64_t seed = 1;
  int trials = 16, max_passes = 10, threads = 1;
};

int run_partition(const PartitionArgs& a) {
  const Hypergraph hg = read_hgr(a.hypergraph);
  RbConfig cfg;
  cfg.multilevel.trials = a.trials;
  cfg.multilevel.max_passes = a.max_passes;
  cfg.threads = a.threads;
  const auto result = partition_pipeline(hg, a.k, a.epsilon, a.seed, cfg);
  if (!a.output.empty()) write_partition(result.block_of, a.output);
  const json j = report_json(result.report, hg, a.seed);
  std::cout << (a.report == "csv" ? report_csv(j) : j.dump(2) + "\n");
  return kExitOk;
}

struct EvaluateArgs {
  std::string hypergraph, partition;
  BlockId k = 2;
  double epsilon = 0.03;
};

int run_evaluate(const EvaluateArgs& a) {
  const Hypergraph hg = read_hgr(a.hypergraph);
  const auto block_of = read_partition(a.partition, hg.num_vertices());
  for (BlockId b : block_of) {
    if (b >= a.k) throw Error("block id " + std::to_string(b) + " not below k=" + std::to_string(a.k));
  }
  const auto pre = preprocess_remove_heavy(hg, a.k, a.epsilon);
  std::vector<Weight> reduced_weights;
  for (VertexId v : pre.reduced.parent_ids()) reduced_weights.push_back(hg.vertex_weight(v));
  const double l_lpt = reduced_weights.empty() ? 0.0 : lpt_balance_bound(reduced_weights, pre.k_prime, a.epsilon);
  const auto weights = block_weights(hg, block_of, a.k);
  std::vector<std::size_t> members(static_cast<std::size_t>(a.k), 0);
  for (BlockId b : block_of) ++members[b];
  // A block passes if it fits L_LPT or holds a single vertex.
  bool balanced = true;
  for (BlockId b = 0; b < a.k; ++b) {
    if (!Bound(l_lpt).admits(weights[b]) && members[b] > 1) balanced = false;
  }
  const double l_k = standard_bound(hg.total_weight(), a.k, a.epsilon);
  const json j{{"km1", connectivity(hg, block_of)},
               {"block_weights", weights},
               {"max_block_weight", *std::max_element(weights.begin(), weights.end())},
               {"l_k", l_k},
               {"l_lpt", l_lpt},
               {"within_l_k", Bound(l_k).admits(*std::max_element(weights.begin(), weights.end()))},
               {"balanced", balanced}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

struct GenerateArgs {
  std::string base, output;
  std::size_t vertices = 0;
  std::uint64_t seed = 1;
};

int run_generate(const GenerateArgs& a) {
  const Hypergraph base = a.base.empty() ? generate_circuit(a.vertices, mix_seed(a.seed, 0x62617365ULL))
                                         : read_hgr(a.base);
  const auto inst = generate_artificial(base, a.seed);
  if (inst.clamped) std::cerr << "warning: heavy weight bound clamped to 1 (degenerate instance)\n";
  write_hgr(inst.hypergraph, a.output);
  const json j{{"vertices", inst.hypergraph.num_vertices()},
               {"nets", inst.hypergraph.num_nets()},
               {"heavy_probability", inst.heavy_probability},
               {"max_heavy_weight", inst.max_heavy_weight},
               {"heavy_count", inst.heavy_count},
               {"heavy_total", inst.heavy_total},
               {"total_weight", inst.hypergraph.total_weight()}};
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

struct ProfileArgs {
  std::vector<std::string> results;
  std::string metric = "km1";
};

// Instances are keyed by every column except algorithm, the metric and
// timing/statistics columns that legitimately differ between algorithms.
int run_profile(const ProfileArgs& a) {
  std::vector<std::string> algorithms;
  std::map<std::string, std::map<std::string, double>> table;  // instance -> algorithm -> quality
  for (const auto& path : a.results) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) throw Error(path + ": empty results file");
    const auto header = split_csv(line);
    std::ptrdiff_t alg = -1, metric = -1;
    std::vector<std::size_t> key_columns;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] == "algorithm") alg = static_cast<std::ptrdiff_t>(c);
      else if (header[c] == a.metric) metric = static_cast<std::ptrdiff_t>(c);
      else if (header[c] == "instance" || header[c] == "k" || header[c] == "epsilon" || header[c] == "seed") {
        key_columns.push_back(c);
      }
    }
    if (alg < 0 || metric < 0) throw Error(path + ": needs 'algorithm' and '" + a.metric + "' columns");
    std::size_t row = 1;
    while (std::getline(in, line)) {
      ++row;
      if (line.empty()) continue;
      const auto cells = split_csv(line);
      if (cells.size() != header.size()) throw Error(path + ": line " + std::to_string(row) + ": column count");
      std::string key;
      for (std::size_t c : key_columns) key += cells[c] + "|";
      const std::string& name = cells[static_cast<std::size_t>(alg)];
      if (std::find(algorithms.begin(), algorithms.end(), name) == algorithms.end()) algorithms.push_back(name);
      table[key][name] = std::stod(cells[static_cast<std::size_t>(metric)]);
    }
  }
  std::vector<std::vector<double>> quality(algorithms.size());
  for (const auto& [key, by_alg] : table) {
    for (std::size_t i = 0; i < algorithms.size(); ++i) {
      const auto it = by_alg.find(algorithms[i]);
      if (it == by_alg.end()) throw Error("instance " + key + " lacks a result for " + algorithms[i]);
      quality[i].push_back(it->second);
    }
  }
  json out = json::array();
  for (const auto& c : performance_profile(algorithms, quality)) {
    out.push_back({{"algorithm", c.algorithm}, {"tau", c.tau}, {"fraction", c.fraction}});
  }
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

struct BenchArgs {
  std::vector<std::string> hypergraphs;
  std::vector<std::size_t> generate;
  std::vector<BlockId> ks{2, 4, 8};
  std::vector<double> epsilons{0.01, 0.03, 0.1};
  std::size_t seeds = 3;
  int threads = 1, trials = 16, max_passes = 10;
  std::string output;
};

int run_bench_command(const BenchArgs& a) {
  std::vector<BenchInstance> instances;
  for (const auto& path : a.hypergraphs) instances.push_back({path, read_hgr(path)});
  for (std::size_t i = 0; i < a.generate.size(); ++i) {
    const auto base = generate_circuit(a.generate[i], mix_seed(i, 0x62617365ULL));
    instances.push_back({"artificial-" + std::to_string(a.generate[i]) + "-" + std::to_string(i),
                         generate_artificial(base, mix_seed(i, 0x77ULL)).hypergraph});
  }
  if (instances.empty()) throw CLI::ValidationError("bench", "no instances: pass --hypergraph or --generate");
  BenchConfig cfg;
  cfg.ks = a.ks;
  cfg.epsilons = a.epsilons;
  cfg.seeds.clear();
  for (std::size_t s = 1; s <= a.seeds; ++s) cfg.seeds.push_back(s);
  cfg.threads = a.threads;
  cfg.rb.multilevel.trials = a.trials;
  cfg.rb.multilevel.max_passes = a.max_passes;
  const auto rows = run_bench(instances, cfg);
  const auto csv = bench_csv(rows);
  if (a.output.empty()) std::cout << csv;
  else write_file(a.output, csv);
  std::cerr << format_summary(summarize_bench(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Balanced hypergraph partitioning for weighted vertices"};
  app.require_subcommand(1);

  PartitionArgs pa;
  auto* partition = app.add_subcommand("partition", "Partition a hypergraph into k blocks");
  partition->add_option("--hypergraph", pa.hypergraph, "Input .hgr file")->required();
  partition->add_option("--k", pa.k, "Number of blocks")->required()->check(CLI::Range(1, 1 << 20));
  partition->add_option("--epsilon", pa.epsilon, "Imbalance")->check(CLI::Range(0.0, 10.0));
  partition->add_option("--seed", pa.seed, "Random seed");
  partition->add_option("--output", pa.output, "Partition file to write");
  partition->add_option("--report", pa.report, "Report format")->check(CLI::IsMember({"json", "csv"}));
  partition->add_option("--trials", pa.trials, "Initial partitioning trials")->check(CLI::Range(1, 1000));
  partition->add_option("--max-passes", pa.max_passes, "FM passes per level")->check(CLI::Range(0, 1000));
  partition->add_option("--threads", pa.threads, "Threads for recursive calls")->check(CLI::Range(1, 256));

  EvaluateArgs ea;
  auto* evaluate = app.add_subcommand("evaluate", "Recompute objective and balance of a partition file");
  evaluate->add_option("--hypergraph", ea.hypergraph, "Input .hgr file")->required();
  evaluate->add_option("--partition", ea.partition, "Partition file")->required();
  evaluate->add_option("--k", ea.k, "Number of blocks")->required()->check(CLI::Range(1, 1 << 20));
  evaluate->add_option("--epsilon", ea.epsilon, "Imbalance")->check(CLI::Range(0.0, 10.0));

  GenerateArgs ga;
  auto* generate = app.add_subcommand("generate", "Create an artificial weighted instance");
  auto* base_opt = generate->add_option("--base", ga.base, "Base .hgr file");
  auto* vertices_opt = generate->add_option("--vertices", ga.vertices, "Size of a generated base netlist")
                           ->check(CLI::Range(std::size_t{121}, std::size_t{1} << 30));
  base_opt->excludes(vertices_opt);
  generate->add_option("--seed", ga.seed, "Random seed");
  generate->add_option("--output", ga.output, "Output .hgr file")->required();

  ProfileArgs pra;
  auto* profile = app.add_subcommand("profile", "Performance profiles from results CSV files");
  profile->add_option("--results", pra.results, "Results CSV (algorithm, instance, metric columns)")
      ->required();
  profile->add_option("--metric", pra.metric, "Quality column");

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "Sweep k x epsilon x seeds and report balance statistics");
  bench->add_option("--hypergraph", ba.hypergraphs, "Input .hgr files");
  bench->add_option("--generate", ba.generate, "Generate artificial instances with these base sizes")
      ->check(CLI::Range(std::size_t{121}, std::size_t{1} << 30));
  bench->add_option("--k", ba.ks, "Block counts")->check(CLI::Range(1, 1 << 20));
  bench->add_option("--epsilon", ba.epsilons, "Imbalances")->check(CLI::Range(0.0, 10.0));
  bench->add_option("--seeds", ba.seeds, "Seeds per cell")->check(CLI::Range(1, 1000));
  bench->add_option("--threads", ba.threads, "Concurrent cells")->check(CLI::Range(1, 256));
  bench->add_option("--trials", ba.trials, "Initial partitioning trials")->check(CLI::Range(1, 1000));
  bench->add_option("--max-passes", ba.max_passes, "FM passes per level")->check(CLI::Range(0, 1000));
  bench->add_option("--output", ba.output, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*partition) return run_partition(pa);
    if (*evaluate) return run_evaluate(ea);
    if (*generate) {
      if (ga.base.empty() && ga.vertices == 0) {
        std::cerr << "generate: pass --base or --vertices\n";
        return kExitUsage;
      }
      return run_generate(ga);
    }
    if (*profile) return run_profile(pra);
    if (*bench) return run_bench_command(ba);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitUsage;
}
