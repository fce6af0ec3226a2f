#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "wpart/hypergraph.h"
#include "wpart/rational.h"
#include "wpart/sparse_table.h"

namespace wpart {

struct LptResult {
  std::vector<BlockId> bin_of;  // indexed like the input sequence
  std::vector<Weight> loads;
  Weight makespan = 0;
};

// Greedy longest-processing-time packing of an already non-increasing
// sequence onto bins that may start non-empty. Each item goes to the
// currently lightest bin, ties broken by the lowest bin index.
LptResult lpt_extend(std::span<const Weight> weights_desc, BlockId k,
                     std::vector<Weight> initial_bins);

// Plain LPT over arbitrary-order weights; bin_of is indexed by input position.
LptResult lpt(std::span<const Weight> weights, BlockId k);

inline Weight lpt_makespan(std::span<const Weight> weights, BlockId k) {
  return lpt(weights, k).makespan;
}

Partition lpt_partition(const Hypergraph& hg, BlockId k);

// Exact OPT(weights, k) by exhaustive search. Guarded to n <= 14, k <= 4.
Weight brute_force_most_balanced(std::span<const Weight> weights, BlockId k);

// Vertex ids in decreasing weight order (ties by increasing id).
std::vector<VertexId> decreasing_weight_order(std::span<const Weight> weights);

// AF_d(seq) = max_i seq[i] + (1/d) Σ_{j<i} seq[j]; 0 for an empty sequence.
Rational af_bound(std::span<const Weight> seq, std::int64_t d);

// Decreasing-weight order of a weight set with prefix sums and, per divisor d,
// a range-maximum table over H_d[i] = c(v_i) + (1/d) Σ_{j<i} c(v_j).
// H_d values share the denominator d, so the table stores numerators.
class WeightIndex {
 public:
  WeightIndex(std::span<const Weight> weights, std::span<const std::int64_t> divisors);

  std::size_t size() const { return order_.size(); }
  std::span<const VertexId> order() const { return order_; }
  // prefix()[i] = weight of the first i items in order; prefix()[0] = 0.
  std::span<const Weight> prefix() const { return prefix_; }
  Weight weight_at(std::size_t pos) const { return prefix_[pos + 1] - prefix_[pos]; }
  Weight range_weight(std::size_t lo, std::size_t hi) const { return prefix_[hi] - prefix_[lo]; }

  // H_d[i] for 0-based position i.
  Rational h_value(std::int64_t d, std::size_t i) const;
  // max H_d[i..j], positions 0-based and inclusive.
  Rational range_max(std::int64_t d, std::size_t i, std::size_t j) const;
  // AF_d over the window order[lo, hi) treated as its own sequence.
  Rational af_bound(std::size_t lo, std::size_t hi, std::int64_t d) const;

  // Smallest t >= 0 with base + c(order[start, start+t)) >= threshold, or
  // nullopt if even the whole remainder does not reach it.
  std::optional<std::size_t> smallest_t(std::size_t start, Weight base, Weight threshold) const;

 private:
  const SparseTable<std::int64_t>& table(std::int64_t d) const;

  std::vector<VertexId> order_;
  std::vector<Weight> prefix_;
  std::map<std::int64_t, SparseTable<std::int64_t>> tables_;
};

}  // namespace wpart
