// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>

#include "oracles.h"
#include "wpart/generator.h"
#include "wpart/lpt.h"
#include "wpart/multilevel.h"
#include "wpart/prepack.h"
#include "wpart/recursive_bipartitioning.h"

using namespace wpart;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Minimum makespan over all k-way partitions by DP over vertex subsets.
Weight exact_makespan(const std::vector<Weight>& w, int k) {
  const std::size_t n = w.size();
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<Weight> sum(full + 1, 0);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sum[mask] = sum[mask & (mask - 1)] + w[low];
  }
  std::vector<Weight> best = sum;  // one bin
  for (int bins = 2; bins <= k; ++bins) {
    std::vector<Weight> next(full + 1);
    for (std::size_t mask = 0; mask <= full; ++mask) {
      Weight b = best[mask];
      for (std::size_t sub = mask; sub > 0; sub = (sub - 1) & mask) {
        b = std::min(b, std::max(best[mask ^ sub], sum[sub]));
      }
      next[mask] = b;
    }
    best = std::move(next);
  }
  return best[full];
}

std::vector<Weight> mixed_weights(Rng& rng, std::size_t n) {
  std::vector<Weight> w(n);
  const Weight hi = rng.uniform(2, 30);
  for (auto& x : w) x = rng.flip() ? rng.uniform(1, hi) : rng.uniform(1, 4);
  return w;
}

Outcome criterion1() {
  Rng rng(20240101);
  std::size_t runs = 0, balanced = 0, triggers = 0, fallbacks = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int inst = 0; inst < 10; ++inst) {
    const auto n = static_cast<std::size_t>(rng.uniform(5000, 20000));
    const auto base = generate_circuit(n, rng.next());
    const auto hg = generate_artificial(base, rng.next()).hypergraph;
    for (BlockId k : {2, 4, 8, 16, 32}) {
      for (double eps : {0.01, 0.03, 0.1}) {
        for (std::uint64_t seed : {1, 2, 3}) {
          const auto r = partition_pipeline(hg, k, eps, seed);
          // Re-verify from scratch against L_LPT.
          const auto weights = block_weights(hg, r.block_of, k);
          bool ok = r.report.balanced;
          for (BlockId b = 0; b < r.report.k_prime; ++b) ok = ok && Bound(r.report.l_lpt).admits(weights[b]);
          ++runs;
          balanced += ok ? 1 : 0;
          triggers += r.report.stats.prepacking_triggers;
          fallbacks += r.report.stats.fallbacks;
        }
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  char buf[200];
  std::snprintf(buf, sizeof buf, "%zu/%zu runs balanced, %zu prepacking triggers, %zu fallbacks, %.1fs (limit 600s)",
                balanced, runs, triggers, fallbacks, secs);
  return {balanced == runs && secs < 600.0, buf};
}

Outcome criterion2() {
  Rng rng(2);
  std::size_t violations = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 12));
    const BlockId k = static_cast<BlockId>(rng.uniform(2, 4));
    const auto w = mixed_weights(rng, n);
    const Weight opt = exact_makespan(w, k);
    const Weight ms = lpt_makespan(w, k);
    if (3 * k * ms > (4 * k - 1) * opt) ++violations;
  }
  return {violations == 0, std::to_string(violations) + " violations in 1000 instances"};
}

Outcome criterion3() {
  Rng rng(3);
  std::size_t accepted = 0, nontrivial = 0, bipartitions = 0, counterexamples = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 10));
    const BlockId k = rng.flip() ? 2 : 4;
    const auto w = mixed_weights(rng, n);
    const auto ctx = BalanceContext::make(w, k, rng.unit() * 0.2);
    const auto bounds = bipartition_bounds(ctx, ctx.total_weight, k);
    const std::vector<std::int64_t> divisors{bounds.k1, bounds.k2};
    const WeightIndex index(w, divisors);
    const auto order = decreasing_weight_order(w);
    // Every prefix of the LPT packing that the property accepts.
    for (std::size_t m = 0; m <= n; ++m) {
      std::vector<Weight> prefix;
      for (std::size_t i = 0; i < m; ++i) prefix.push_back(w[order[i]]);
      const auto packing = lpt_extend(prefix, k, std::vector<Weight>(static_cast<std::size_t>(k), 0));
      std::vector<BlockId> bin(n, kInvalidBlock);
      for (std::size_t i = 0; i < m; ++i) bin[order[i]] = packing.bin_of[i];
      const auto p = Prepacking::from_packing(w, k, bin);
      if (!satisfies_balance_property(p, index, w, ctx, bounds)) continue;
      ++accepted;
      nontrivial += m > 0 ? 1 : 0;
      counterexamples += oracle::deep_balance_counterexamples(
          w, p.side_of, {bounds.capacity(0), bounds.capacity(1)}, bounds.k1, bounds.k2,
          ctx.bound().capacity(), &bipartitions);
    }
  }
  return {counterexamples == 0,
          std::to_string(counterexamples) + " counterexamples; " + std::to_string(accepted) +
              " accepted prepackings (" + std::to_string(nontrivial) + " non-empty), " +
              std::to_string(bipartitions) + " bipartitions enumerated"};
}

Outcome criterion4() {
  Rng rng(4);
  std::size_t violations = 0, mismatches = 0;
  for (int iter = 0; iter < 1000; ++iter) {
    const BlockId k = static_cast<BlockId>(rng.uniform(1, 6));
    std::vector<Weight> bins(static_cast<std::size_t>(k));
    for (auto& b : bins) b = rng.uniform(0, 40);
    const auto rest = oracle::sorted_desc(oracle::random_weights(rng, static_cast<std::size_t>(rng.uniform(0, 20)), 25));
    const auto r = lpt_extend(rest, k, bins);
    if (r.loads != oracle::greedy_loads(rest, bins)) ++mismatches;
    const Weight fixed = std::accumulate(bins.begin(), bins.end(), Weight{0});
    const Rational bound = std::max(Rational(fixed, k) + oracle::af(rest, k),
                                    Rational(*std::max_element(bins.begin(), bins.end())));
    if (Rational(r.makespan) > bound) ++violations;
  }
  return {violations == 0 && mismatches == 0,
          std::to_string(violations) + " violations in 1000 pairs, " + std::to_string(mismatches) +
              " disagreements with step-by-step greedy"};
}

Outcome criterion5() {
  Rng rng(5);
  std::size_t checks = 0, violations = 0;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::int64_t k : {2, 3}) {
      for (int rep = 0; rep < 6; ++rep) {
        const auto list = oracle::sorted_desc(oracle::random_weights(rng, n, rep % 2 == 0 ? 6 : 40));
        std::vector<Rational> af_prefix(n + 1);
        std::vector<Weight> sum_prefix(n + 1, 0);
        for (std::size_t m = 0; m <= n; ++m) {
          af_prefix[m] = oracle::af(std::vector<Weight>(list.begin(), list.begin() + static_cast<std::ptrdiff_t>(m)), k);
          if (m > 0) sum_prefix[m] = sum_prefix[m - 1] + list[m - 1];
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
          std::vector<Weight> sub;
          for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) sub.push_back(list[i]);
          }
          const Weight c_sub = std::accumulate(sub.begin(), sub.end(), Weight{0});
          const Rational af_sub = oracle::af(sub, k);
          // Prefixes hold at least one element.
          for (std::size_t m = 1; m <= n; ++m) {
            ++checks;
            if (c_sub <= sum_prefix[m]) {
              if (af_sub > af_prefix[m]) ++violations;
            } else if (af_sub - Rational(c_sub, k) > af_prefix[m] - Rational(sum_prefix[m], k)) {
              ++violations;
            }
          }
        }
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(checks) +
                               " (subsequence, m) checks"};
}

Outcome criterion6() {
  Rng rng(6);
  std::size_t failures = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 100000));
    const BlockId k = static_cast<BlockId>(rng.uniform(1, 256));
    const double eps = rng.unit() * 0.2;
    const std::vector<Weight> unit(n, 1);
    const double l_lpt = lpt_balance_bound(unit, k, eps);
    const double l_k = standard_bound(static_cast<Weight>(n), k, eps);
    const double eps_hat = modified_epsilon(unit, k, eps);
    if (l_lpt != l_k || std::abs(eps_hat - eps) > 1e-12) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " mismatches in 100 instances"};
}

Outcome criterion7() {
  Rng rng(7);
  std::size_t rmq_bad = 0, t_bad = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 80));
    const auto w = oracle::random_weights(rng, n, 100);
    const std::int64_t d = rng.uniform(1, 16);
    const std::vector<std::int64_t> ds{d};
    const WeightIndex index(w, ds);
    const auto sorted = oracle::sorted_desc(w);
    const auto i = static_cast<std::size_t>(rng.below(n));
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    Rational naive(0, d);
    for (std::size_t p = i; p <= j; ++p) {
      Weight before = 0;
      for (std::size_t q = 0; q < p; ++q) before += sorted[q];
      naive = std::max(naive, Rational(d * sorted[p] + before, d));
    }
    if (!(index.range_max(d, i, j) == naive)) ++rmq_bad;
  }
  for (int iter = 0; iter < 10000; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 80));
    const auto w = oracle::random_weights(rng, n, 100);
    const std::vector<std::int64_t> ds{1};
    const WeightIndex index(w, ds);
    const auto sorted = oracle::sorted_desc(w);
    const auto start = static_cast<std::size_t>(rng.below(n + 1));
    const Weight base = rng.uniform(0, 200);
    const Weight threshold = rng.uniform(0, 5000);
    std::optional<std::size_t> linear;
    Weight acc = base;
    for (std::size_t t = 0; start + t <= n; ++t) {
      if (acc >= threshold) {
        linear = t;
        break;
      }
      if (start + t < n) acc += sorted[start + t];
    }
    if (index.smallest_t(start, base, threshold) != linear) ++t_bad;
  }
  return {rmq_bad == 0 && t_bad == 0, std::to_string(rmq_bad) + "/10000 range_max and " +
                                          std::to_string(t_bad) + "/10000 smallest_t disagreements"};
}

Outcome criterion8() {
  Rng rng(8);
  std::size_t passes = 0, increases = 0, drift = 0;
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(20, 2000));
    const auto w = mixed_weights(rng, n);
    const auto hg = oracle::random_hypergraph(rng, w, n + n / 3, 8);
    std::vector<std::int8_t> fixed(n, kFreeSide);
    std::vector<BlockId> side(n);
    std::array<Weight, 2> load{0, 0};
    for (VertexId v = 0; v < n; ++v) {
      side[v] = static_cast<BlockId>(rng.below(2));
      if (load[side[v]] > load[1 - side[v]] + 30) side[v] = 1 - side[v];
      load[side[v]] += w[v];
      if (rng.below(15) == 0) fixed[v] = static_cast<std::int8_t>(side[v]);
    }
    const Weight cap = std::max(load[0], load[1]) + rng.uniform(0, 20);
    FmConfig cfg;
    cfg.verify = true;
    cfg.max_passes = 20;
    const Weight start = connectivity(hg, side);
    const auto r = fm_refine(hg, side, fixed, {cap, cap}, cfg);
    Weight prev = start;
    for (const auto& p : r.passes) {
      ++passes;
      if (p.objective_before != prev || p.objective_after > p.objective_before) ++increases;
      if (p.objective_after != p.objective_recomputed) ++drift;
      prev = p.objective_after;
    }
    if (connectivity(hg, side) != r.objective) ++drift;
  }
  return {increases == 0 && drift == 0, std::to_string(passes) + " passes, " + std::to_string(increases) +
                                            " increases, " + std::to_string(drift) + " bookkeeping mismatches"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 balanced rate on artificial instances", criterion1},
      {"C2 LPT within the Graham factor of OPT", criterion2},
      {"C3 accepted prepackings are sufficiently balanced", criterion3},
      {"C4 LPT extension bound", criterion4},
      {"C5 heaviest-prefix AF monotonicity", criterion5},
      {"C6 unweighted L_LPT == L(k), eps_hat == eps", criterion6},
      {"C7 range_max and smallest_t oracles", criterion7},
      {"C8 FM monotonicity and exact bookkeeping", criterion8},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const Outcome o = run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  std::printf("[N/A ] C9 quality and running-time comparisons against external partitioners and the "
              "fixed-vertex percentages on the real-world benchmark suite: not reproducible here; the "
              "bench command emits the same report schema for external comparison\n");
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
