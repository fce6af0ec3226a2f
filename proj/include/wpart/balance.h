#pragma once

#include <array>
#include <span>
#include <vector>

#include "wpart/hypergraph.h"
#include "wpart/rational.h"

namespace wpart {

inline constexpr double kBalanceTolerance = 1e-9;

// A real-valued upper bound on block weight. Integer weights are compared as
// w <= value + 1e-9·value, which makes capacity() the largest admitted weight.
class Bound {
 public:
  Bound() = default;
  explicit Bound(double value) : value_(value) {}

  double value() const { return value_; }
  Weight capacity() const;
  bool admits(Weight w) const { return w <= capacity(); }
  bool admits(const Rational& r) const {
    return r.at_most(static_cast<long double>(value_) * (1.0L + kBalanceTolerance));
  }

 private:
  double value_ = 0.0;
};

// L(k) = (1+ε)·⌈c(V)/k⌉.
double standard_bound(Weight total, BlockId k, double epsilon);
// L_max = L(k) + max_v c(v). Reported only.
double fm_bound(Weight total, BlockId k, double epsilon, Weight max_vertex_weight);
// L_LPT = (1+ε)·LPT(H, k).
double lpt_balance_bound(std::span<const Weight> vertex_weights, BlockId k, double epsilon);
inline double lpt_balance_bound(const Hypergraph& hg, BlockId k, double epsilon) {
  return lpt_balance_bound(hg.vertex_weights(), k, epsilon);
}

struct BalanceContext {
  BlockId k = 1;
  double epsilon = 0.0;
  Weight total_weight = 0;
  double l_k = 0.0;
  double l_lpt = 0.0;
  double epsilon_hat = 0.0;

  static BalanceContext make(std::span<const Weight> vertex_weights, BlockId k, double epsilon);
  Bound bound() const { return Bound(l_k); }
};

struct AdaptiveEpsilon {
  double value = 0.0;
  bool clamped = false;  // raw value fell below kMinAdaptiveEpsilon
};
inline constexpr double kMinAdaptiveEpsilon = -0.5;

// ε' = ((1+ε)·(c(V)/k)·(k'/c(V')))^(1/⌈log2 k'⌉) - 1, clamped below at -0.5.
AdaptiveEpsilon adaptive_epsilon(const BalanceContext& ctx, Weight subset_weight, BlockId k_prime);

int ceil_log2(BlockId k);

// Per-side block-weight bounds for one bipartition step that splits V' into
// k1 = ⌈k'/2⌉ and k2 = ⌊k'/2⌋ target blocks. Side s may hold
// (1+ε')·⌈c(V')·k_s/k'⌉, never below perfect balance and never above
// k_s·L(k). For even k' both sides coincide with (1+ε')·⌈c(V')/2⌉.
struct BipartitionBounds {
  BlockId k1 = 1;
  BlockId k2 = 1;
  std::array<Bound, 2> side{};
  double epsilon_prime = 0.0;

  BlockId k_of(int s) const { return s == 0 ? k1 : k2; }
  Weight capacity(int s) const { return side[s].capacity(); }
};

BipartitionBounds bipartition_bounds(const BalanceContext& ctx, Weight subset_weight,
                                     BlockId k_prime);

struct PreprocessResult {
  VertexSubset reduced;
  std::vector<VertexId> removed;  // in removal order (heaviest first)
  BlockId k_prime;
};

// Repeatedly drops the heaviest vertex while it exceeds (1+ε)·⌈c(rest)/k_cur⌉,
// decrementing k_cur once per removal.
PreprocessResult preprocess_remove_heavy(const Hypergraph& hg, BlockId k, double epsilon);

// ε̂ such that (1+ε̂)·⌈c(V')/k'⌉ equals L_LPT(V', k', ε).
double modified_epsilon(std::span<const Weight> reduced_weights, BlockId k_prime, double epsilon);
inline double modified_epsilon(const Hypergraph& reduced, BlockId k_prime, double epsilon) {
  return modified_epsilon(reduced.vertex_weights(), k_prime, epsilon);
}

}  // namespace wpart
