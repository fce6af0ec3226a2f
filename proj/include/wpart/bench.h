#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpart/recursive_bipartitioning.h"

namespace wpart {

inline constexpr int kBenchSchemaVersion = 1;

struct BenchInstance {
  std::string name;
  Hypergraph hypergraph;
};

struct BenchConfig {
  std::vector<BlockId> ks{2, 4, 8};
  std::vector<double> epsilons{0.01, 0.03, 0.1};
  std::vector<std::uint64_t> seeds{1, 2, 3};
  int threads = 1;  // concurrent cells; each cell runs single-threaded
  RbConfig rb;
};

struct BenchRow {
  std::string instance;
  BlockId k = 0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  PipelineReport report;
};

// Runs every (instance, k, ε, seed) cell; rows come back in sweep order.
std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances, const BenchConfig& config);

// Columns: schema_version, algorithm, instance, k, epsilon, seed, km1,
// max_block_weight, l_lpt, epsilon_hat, balanced, certified,
// prepacking_triggers, fixed_fraction, bipartitions, fallbacks, removed, seconds.
std::string bench_csv(const std::vector<BenchRow>& rows);

struct BenchSummary {
  BlockId k = 0;
  double epsilon = 0.0;
  std::size_t runs = 0;
  std::size_t imbalanced = 0;
  double mean_fixed_fraction = 0.0;  // over runs that triggered a prepacking
  std::size_t triggered_runs = 0;
};

// Per (k, ε): imbalanced rate and fixed-vertex fraction.
std::vector<BenchSummary> summarize_bench(const std::vector<BenchRow>& rows);
std::string format_summary(const std::vector<BenchSummary>& summary);

}  // namespace wpart
