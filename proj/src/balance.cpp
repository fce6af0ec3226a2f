#include "wpart/balance.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wpart/lpt.h"

namespace wpart {

Weight Bound::capacity() const {
  const long double slack = static_cast<long double>(value_) * (1.0L + kBalanceTolerance);
  return static_cast<Weight>(std::floor(slack));
}

double standard_bound(Weight total, BlockId k, double epsilon) {
  if (k < 1) throw Error("k must be at least 1");
  return (1.0 + epsilon) * static_cast<double>(ceil_div(total, k));
}

double fm_bound(Weight total, BlockId k, double epsilon, Weight max_vertex_weight) {
  if (max_vertex_weight <= 0) throw Error("maximum vertex weight must be positive");
  return standard_bound(total, k, epsilon) + static_cast<double>(max_vertex_weight);
}

double lpt_balance_bound(std::span<const Weight> vertex_weights, BlockId k, double epsilon) {
  if (k < 1) throw Error("k must be at least 1");
  return (1.0 + epsilon) * static_cast<double>(lpt_makespan(vertex_weights, k));
}

BalanceContext BalanceContext::make(std::span<const Weight> vertex_weights, BlockId k,
                                    double epsilon) {
  BalanceContext ctx;
  ctx.k = k;
  ctx.epsilon = epsilon;
  ctx.total_weight = std::accumulate(vertex_weights.begin(), vertex_weights.end(), Weight{0},
                                     [](Weight a, Weight b) { return checked_add(a, b); });
  ctx.l_k = standard_bound(ctx.total_weight, k, epsilon);
  ctx.l_lpt = lpt_balance_bound(vertex_weights, k, epsilon);
  ctx.epsilon_hat = vertex_weights.empty() ? epsilon : modified_epsilon(vertex_weights, k, epsilon);
  return ctx;
}

int ceil_log2(BlockId k) {
  int bits = 0;
  while ((BlockId{1} << bits) < k) ++bits;
  return bits;
}

AdaptiveEpsilon adaptive_epsilon(const BalanceContext& ctx, Weight subset_weight, BlockId k_prime) {
  if (k_prime < 2) throw Error("adaptive imbalance requires k' >= 2");
  if (subset_weight <= 0) throw Error("adaptive imbalance requires positive subset weight");
  const double radicand = (1.0 + ctx.epsilon) *
                          (static_cast<double>(ctx.total_weight) / ctx.k) *
                          (static_cast<double>(k_prime) / static_cast<double>(subset_weight));
  if (!(radicand > 0.0)) {
    throw Error("adaptive imbalance: non-positive radicand " + std::to_string(radicand));
  }
  AdaptiveEpsilon result;
  result.value = std::pow(radicand, 1.0 / ceil_log2(k_prime)) - 1.0;
  if (result.value < kMinAdaptiveEpsilon) {
    result.value = kMinAdaptiveEpsilon;
    result.clamped = true;
  }
  return result;
}

BipartitionBounds bipartition_bounds(const BalanceContext& ctx, Weight subset_weight,
                                     BlockId k_prime) {
  BipartitionBounds b;
  b.k1 = (k_prime + 1) / 2;
  b.k2 = k_prime / 2;
  b.epsilon_prime = adaptive_epsilon(ctx, subset_weight, k_prime).value;
  for (int s = 0; s < 2; ++s) {
    const BlockId ks = b.k_of(s);
    const auto perfect = static_cast<double>(ceil_div(subset_weight * ks, k_prime));
    double value = std::max(perfect, (1.0 + b.epsilon_prime) * perfect);
    value = std::min(value, ks * ctx.l_k);
    b.side[s] = Bound(value);
  }
  return b;
}

PreprocessResult preprocess_remove_heavy(const Hypergraph& hg, BlockId k, double epsilon) {
  if (k < 1) throw Error("k must be at least 1");
  const auto order = decreasing_weight_order(hg.vertex_weights());
  Weight remaining = hg.total_weight();
  BlockId k_cur = k;
  std::vector<VertexId> removed;
  for (VertexId v : order) {
    const Bound bound(standard_bound(remaining, k_cur, epsilon));
    if (bound.admits(hg.vertex_weight(v))) break;
    removed.push_back(v);
    remaining -= hg.vertex_weight(v);
    if (--k_cur == 0) throw Error("heavy-vertex removal left no blocks (degenerate input)");
  }
  std::vector<bool> is_removed(hg.num_vertices(), false);
  for (VertexId v : removed) is_removed[v] = true;
  std::vector<VertexId> kept;
  kept.reserve(hg.num_vertices() - removed.size());
  for (VertexId v = 0; v < hg.num_vertices(); ++v) {
    if (!is_removed[v]) kept.push_back(v);
  }
  return {VertexSubset(std::move(kept), hg.num_vertices()), std::move(removed), k_cur};
}

double modified_epsilon(std::span<const Weight> reduced_weights, BlockId k_prime, double epsilon) {
  if (k_prime < 1) throw Error("k' must be at least 1");
  const Weight total = std::accumulate(reduced_weights.begin(), reduced_weights.end(), Weight{0});
  if (total == 0) return epsilon;
  return lpt_balance_bound(reduced_weights, k_prime, epsilon) /
             static_cast<double>(ceil_div(total, k_prime)) -
         1.0;
}

}  // namespace wpart
