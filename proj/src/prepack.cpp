#include "wpart/prepack.h"

#include <algorithm>
#include <functional>
#include <queue>

namespace wpart {

Prepacking Prepacking::none(std::size_t n, BlockId k_prime) {
  Prepacking p;
  p.side_of.assign(n, kFreeSide);
  p.packing_bin.assign(n, kInvalidBlock);
  p.packing_loads.assign(static_cast<std::size_t>(k_prime), 0);
  return p;
}

Prepacking Prepacking::from_packing(std::span<const Weight> weights, BlockId k_prime,
                                    std::vector<BlockId> packing_bin) {
  if (packing_bin.size() != weights.size()) throw Error("prepacking size mismatch");
  Prepacking p = none(weights.size(), k_prime);
  const BlockId fold = (k_prime + 1) / 2;
  for (VertexId v = 0; v < weights.size(); ++v) {
    const BlockId b = packing_bin[v];
    if (b == kInvalidBlock) continue;
    if (b < 0 || b >= k_prime) throw Error("prepacking bin out of range");
    const std::int8_t side = b < fold ? 0 : 1;
    p.side_of[v] = side;
    p.side_weight[side] += weights[v];
    p.packing_loads[b] += weights[v];
    ++p.num_fixed;
  }
  p.packing_bin = std::move(packing_bin);
  return p;
}

Weight Prepacking::max_packing() const {
  return packing_loads.empty() ? 0 : *std::max_element(packing_loads.begin(), packing_loads.end());
}

DeepBalanceCheck check_deep_balance(const BalanceContext& ctx, std::span<const Weight> weights,
                                    std::span<const BlockId> side_of, BlockId k1, BlockId k2) {
  DeepBalanceCheck result;
  result.bin_in_side.assign(weights.size(), kInvalidBlock);
  const Bound bound = ctx.bound();
  bool ok = true;
  for (int s = 0; s < 2; ++s) {
    std::vector<VertexId> members;
    std::vector<Weight> member_weights;
    for (VertexId v = 0; v < weights.size(); ++v) {
      if (side_of[v] == s) {
        members.push_back(v);
        member_weights.push_back(weights[v]);
      }
    }
    const auto packed = lpt(member_weights, s == 0 ? k1 : k2);
    for (std::size_t i = 0; i < members.size(); ++i) result.bin_in_side[members[i]] = packed.bin_of[i];
    result.makespan[s] = packed.makespan;
    ok = ok && bound.admits(packed.makespan);
  }
  result.deeply_balanced = ok;
  return result;
}

namespace {

// Conditions (ii)/(iii) with the ordinary vertices at positions [start, n) of
// `index`.
bool af_conditions_hold(const WeightIndex& index, std::size_t start,
                        const std::array<Weight, 2>& side_weight, const BalanceContext& ctx,
                        const BipartitionBounds& bounds, BalanceRule rule) {
  const Bound bound = ctx.bound();
  const std::size_t n = index.size();
  const auto window_end = [&](Weight base, Weight threshold) {
    const auto t = index.smallest_t(start, base, threshold);
    return t ? start + *t : n;
  };

  if (rule == BalanceRule::kEven) {
    const BlockId half = bounds.k1;
    const Weight max_p = std::max(side_weight[0], side_weight[1]);
    const std::size_t end = window_end(max_p, bounds.capacity(0));
    return bound.admits(Rational(max_p, half) + index.af_bound(start, end, half));
  }
  for (int s = 0; s < 2; ++s) {
    const BlockId ks = bounds.k_of(s);
    const std::size_t end = window_end(side_weight[s], bounds.capacity(s));
    if (!bound.admits(Rational(side_weight[s], ks) + index.af_bound(start, end, ks))) return false;
  }
  return true;
}

BalanceRule resolve_rule(BalanceRule rule, const BipartitionBounds& bounds) {
  if (rule == BalanceRule::kAuto) {
    return bounds.k1 == bounds.k2 ? BalanceRule::kEven : BalanceRule::kGeneralized;
  }
  if (rule == BalanceRule::kEven && bounds.k1 != bounds.k2) {
    throw Error("even balance rule requires an even block count");
  }
  return rule;
}

std::vector<std::int64_t> divisors_for(const BipartitionBounds& bounds) {
  return {bounds.k1, bounds.k2};
}

}  // namespace

bool satisfies_balance_property(const Prepacking& prepacking, const WeightIndex& index,
                                std::span<const Weight> weights, const BalanceContext& ctx,
                                const BipartitionBounds& bounds, BalanceRule rule) {
  rule = resolve_rule(rule, bounds);
  if (!ctx.bound().admits(prepacking.max_packing())) return false;  // condition (i)

  // Fast path: fixed vertices are exactly a prefix of the decreasing order.
  const auto order = index.order();
  const std::size_t m = prepacking.num_fixed;
  bool prefix = m <= order.size();
  for (std::size_t i = 0; prefix && i < m; ++i) prefix = prepacking.is_fixed(order[i]);
  if (prefix) return af_conditions_hold(index, m, prepacking.side_weight, ctx, bounds, rule);

  std::vector<Weight> ordinary;
  for (VertexId v = 0; v < weights.size(); ++v) {
    if (!prepacking.is_fixed(v)) ordinary.push_back(weights[v]);
  }
  const auto divisors = divisors_for(bounds);
  const WeightIndex remaining(ordinary, divisors);
  return af_conditions_hold(remaining, 0, prepacking.side_weight, ctx, bounds, rule);
}

Prepacking compute_prepacking(const BalanceContext& ctx, std::span<const Weight> weights,
                              const BipartitionBounds& bounds) {
  const BlockId k_prime = bounds.k1 + bounds.k2;
  const BalanceRule rule = resolve_rule(BalanceRule::kAuto, bounds);
  const auto divisors = divisors_for(bounds);
  const WeightIndex index(weights, divisors);
  const Bound bound_k = ctx.bound();

  Prepacking p = Prepacking::none(weights.size(), k_prime);
  using Entry = std::pair<Weight, BlockId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> bins;
  for (BlockId b = 0; b < k_prime; ++b) bins.emplace(0, b);
  Weight max_packing = 0;

  const auto order = index.order();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId v = order[i];
    auto [load, b] = bins.top();
    bins.pop();
    load += weights[v];
    bins.emplace(load, b);
    max_packing = std::max(max_packing, load);

    const std::int8_t side = b < bounds.k1 ? 0 : 1;
    p.packing_bin[v] = b;
    p.packing_loads[b] = load;
    p.side_of[v] = side;
    p.side_weight[side] += weights[v];
    ++p.num_fixed;

    if (p.side_weight[0] <= bounds.capacity(0) && p.side_weight[1] <= bounds.capacity(1) &&
        bound_k.admits(max_packing)) {
      ++p.evaluations;
      if (af_conditions_hold(index, i + 1, p.side_weight, ctx, bounds, rule)) return p;
    }
  }
  p.exhausted = true;
  return p;
}

}  // namespace wpart
