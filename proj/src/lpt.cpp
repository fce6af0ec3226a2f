#include "wpart/lpt.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <string>

namespace wpart {

LptResult lpt_extend(std::span<const Weight> weights_desc, BlockId k,
                     std::vector<Weight> initial_bins) {
  if (k < 1) throw Error("LPT requires k >= 1");
  if (initial_bins.size() != static_cast<std::size_t>(k)) {
    throw Error("LPT: expected " + std::to_string(k) + " initial bins, got " +
                std::to_string(initial_bins.size()));
  }
  for (std::size_t i = 1; i < weights_desc.size(); ++i) {
    if (weights_desc[i] > weights_desc[i - 1]) throw Error("LPT: input is not sorted non-increasingly");
  }

  // (load, bin) min-heap; only the popped bin changes, so entries never go stale.
  using Entry = std::pair<Weight, BlockId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> bins;
  for (BlockId b = 0; b < k; ++b) bins.emplace(initial_bins[b], b);

  LptResult result;
  result.bin_of.resize(weights_desc.size());
  result.loads = std::move(initial_bins);
  for (std::size_t i = 0; i < weights_desc.size(); ++i) {
    auto [load, b] = bins.top();
    bins.pop();
    result.bin_of[i] = b;
    load = checked_add(load, weights_desc[i]);
    result.loads[b] = load;
    bins.emplace(load, b);
  }
  result.makespan = *std::max_element(result.loads.begin(), result.loads.end());
  return result;
}

std::vector<VertexId> decreasing_weight_order(std::span<const Weight> weights) {
  std::vector<VertexId> order(weights.size());
  std::iota(order.begin(), order.end(), VertexId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return weights[a] > weights[b]; });
  return order;
}

LptResult lpt(std::span<const Weight> weights, BlockId k) {
  const auto order = decreasing_weight_order(weights);
  std::vector<Weight> sorted(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted[i] = weights[order[i]];
  auto packed = lpt_extend(sorted, k, std::vector<Weight>(static_cast<std::size_t>(k), 0));
  std::vector<BlockId> bin_of(weights.size());
  for (std::size_t i = 0; i < order.size(); ++i) bin_of[order[i]] = packed.bin_of[i];
  packed.bin_of = std::move(bin_of);
  return packed;
}

Partition lpt_partition(const Hypergraph& hg, BlockId k) {
  return Partition(hg, k, lpt(hg.vertex_weights(), k).bin_of);
}

namespace {

struct BranchAndBound {
  std::vector<Weight> items;  // sorted non-increasingly
  std::vector<Weight> loads;
  Weight best;
  Weight lower_bound;

  void search(std::size_t i, std::size_t used, Weight current_max) {
    if (best == lower_bound) return;
    if (i == items.size()) {
      best = std::min(best, current_max);
      return;
    }
    // A new item may open at most one fresh bin: bins are interchangeable.
    const std::size_t limit = std::min(loads.size(), used + 1);
    for (std::size_t b = 0; b < limit; ++b) {
      const Weight load = loads[b] + items[i];
      if (load >= best) continue;
      loads[b] = load;
      search(i + 1, std::max(used, b + 1), std::max(current_max, load));
      loads[b] -= items[i];
    }
  }
};

}  // namespace

Weight brute_force_most_balanced(std::span<const Weight> weights, BlockId k) {
  if (k < 1) throw Error("k must be at least 1");
  if (weights.size() > 14 || k > 4) {
    throw Error("exhaustive most-balanced oracle limited to n <= 14 and k <= 4");
  }
  if (weights.empty()) return 0;
  BranchAndBound bb;
  bb.items.assign(weights.begin(), weights.end());
  std::sort(bb.items.begin(), bb.items.end(), std::greater<>());
  bb.loads.assign(static_cast<std::size_t>(k), 0);
  const Weight total = std::accumulate(bb.items.begin(), bb.items.end(), Weight{0});
  bb.lower_bound = std::max(bb.items.front(), ceil_div(total, k));
  bb.best = total + 1;
  bb.search(0, 0, 0);
  return bb.best;
}

Rational af_bound(std::span<const Weight> seq, std::int64_t d) {
  if (d < 1) throw Error("AF divisor must be >= 1");
  Rational best(0, d);
  Weight prefix = 0;
  for (Weight w : seq) {
    best = std::max(best, Rational(d * w + prefix, d));
    prefix = checked_add(prefix, w);
  }
  return best;
}

WeightIndex::WeightIndex(std::span<const Weight> weights, std::span<const std::int64_t> divisors)
    : order_(decreasing_weight_order(weights)) {
  prefix_.resize(order_.size() + 1, 0);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    prefix_[i + 1] = checked_add(prefix_[i], weights[order_[i]]);
  }
  for (std::int64_t d : divisors) {
    if (d < 1) throw Error("AF divisor must be >= 1");
    if (tables_.contains(d)) continue;
    std::vector<std::int64_t> h(order_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) h[i] = d * weight_at(i) + prefix_[i];
    tables_.emplace(d, SparseTable<std::int64_t>(std::move(h)));
  }
}

const SparseTable<std::int64_t>& WeightIndex::table(std::int64_t d) const {
  const auto it = tables_.find(d);
  if (it == tables_.end()) throw Error("no range-maximum table built for divisor " + std::to_string(d));
  return it->second;
}

Rational WeightIndex::h_value(std::int64_t d, std::size_t i) const {
  if (i >= size()) throw Error("H_d index out of range");
  return {table(d)[i], d};
}

Rational WeightIndex::range_max(std::int64_t d, std::size_t i, std::size_t j) const {
  return {table(d).max(i, j), d};
}

Rational WeightIndex::af_bound(std::size_t lo, std::size_t hi, std::int64_t d) const {
  if (lo > hi || hi > size()) throw Error("AF window out of range");
  if (lo == hi) return {0, d};
  // Shifting the window start subtracts the same prefix from every H_d entry.
  return {table(d).max(lo, hi - 1) - prefix_[lo], d};
}

std::optional<std::size_t> WeightIndex::smallest_t(std::size_t start, Weight base,
                                                   Weight threshold) const {
  if (start > size()) throw Error("smallest_t: start out of range");
  if (base >= threshold) return 0;
  const Weight target = threshold - base + prefix_[start];
  const auto it = std::lower_bound(prefix_.begin() + static_cast<std::ptrdiff_t>(start), prefix_.end(), target);
  if (it == prefix_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - prefix_.begin()) - start;
}

}  // namespace wpart
