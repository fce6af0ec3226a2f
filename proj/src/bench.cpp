#include "wpart/bench.h"

#include <atomic>
#include <cstdio>
#include <map>
#include <sstream>
#include <thread>

namespace wpart {

std::vector<BenchRow> run_bench(const std::vector<BenchInstance>& instances, const BenchConfig& config) {
  struct Cell {
    std::size_t instance;
    BlockId k;
    double epsilon;
    std::uint64_t seed;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    for (BlockId k : config.ks) {
      for (double eps : config.epsilons) {
        for (std::uint64_t seed : config.seeds) cells.push_back({i, k, eps, seed});
      }
    }
  }
  std::vector<BenchRow> rows(cells.size());
  RbConfig rb = config.rb;
  rb.threads = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t c = next++; c < cells.size(); c = next++) {
      const Cell& cell = cells[c];
      auto result = partition_pipeline(instances[cell.instance].hypergraph, cell.k, cell.epsilon, cell.seed, rb);
      rows[c] = BenchRow{instances[cell.instance].name, cell.k, cell.epsilon, cell.seed, std::move(result.report)};
    }
  };
  const int threads = std::max(1, config.threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "schema_version,algorithm,instance,k,epsilon,seed,km1,max_block_weight,l_lpt,epsilon_hat,"
         "balanced,certified,prepacking_triggers,fixed_fraction,bipartitions,fallbacks,removed,seconds\n";
  char buf[64];
  for (const auto& r : rows) {
    const auto& p = r.report;
    out << kBenchSchemaVersion << ",wpart-rb," << r.instance << ',' << r.k << ',' << r.epsilon << ','
        << r.seed << ',' << p.objective << ',' << p.max_block_weight << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.9f,", p.l_lpt, p.epsilon_hat);
    out << buf << (p.balanced ? 1 : 0) << ',' << (p.certified ? 1 : 0) << ','
        << p.stats.prepacking_triggers << ',';
    std::snprintf(buf, sizeof buf, "%.6f,", p.stats.fixed_fraction());
    out << buf << p.stats.bipartitions << ',' << p.stats.fallbacks << ',' << p.removed << ',';
    std::snprintf(buf, sizeof buf, "%.4f", p.seconds);
    out << buf << '\n';
  }
  return out.str();
}

std::vector<BenchSummary> summarize_bench(const std::vector<BenchRow>& rows) {
  std::map<std::pair<BlockId, double>, BenchSummary> cells;
  for (const auto& r : rows) {
    auto& s = cells[{r.k, r.epsilon}];
    s.k = r.k;
    s.epsilon = r.epsilon;
    ++s.runs;
    if (!r.report.balanced) ++s.imbalanced;
    if (r.report.stats.prepacking_triggers > 0) {
      ++s.triggered_runs;
      s.mean_fixed_fraction += r.report.stats.fixed_fraction();
    }
  }
  std::vector<BenchSummary> out;
  for (auto& [key, s] : cells) {
    if (s.triggered_runs > 0) s.mean_fixed_fraction /= static_cast<double>(s.triggered_runs);
    out.push_back(s);
  }
  return out;
}

std::string format_summary(const std::vector<BenchSummary>& summary) {
  std::ostringstream out;
  char line[160];
  std::snprintf(line, sizeof line, "%6s %8s %6s %12s %10s %14s\n", "k", "epsilon", "runs", "imbalanced%",
                "triggered", "fixed-vertex%");
  out << line;
  for (const auto& s : summary) {
    std::snprintf(line, sizeof line, "%6d %8.3f %6zu %12.2f %10zu %14.2f\n", s.k, s.epsilon, s.runs,
                  100.0 * static_cast<double>(s.imbalanced) / static_cast<double>(std::max<std::size_t>(s.runs, 1)),
                  s.triggered_runs, 100.0 * s.mean_fixed_fraction);
    out << line;
  }
  return out.str();
}

}  // namespace wpart
