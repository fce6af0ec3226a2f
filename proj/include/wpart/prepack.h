#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wpart/balance.h"
#include "wpart/lpt.h"

namespace wpart {

inline constexpr std::int8_t kFreeSide = -1;

// A 2-way assignment of fixed vertices together with the k'-way packing it
// was folded from: bins [0, ⌈k'/2⌉) form side 0, the remaining bins side 1.
struct Prepacking {
  std::vector<std::int8_t> side_of;   // per vertex: kFreeSide, 0 or 1
  std::vector<BlockId> packing_bin;   // per vertex: bin in the k'-way packing or kInvalidBlock
  std::vector<Weight> packing_loads;  // k' bin weights
  std::array<Weight, 2> side_weight{0, 0};
  std::size_t num_fixed = 0;
  bool exhausted = false;
  std::size_t evaluations = 0;  // balance-property checks performed while building

  static Prepacking none(std::size_t n, BlockId k_prime);
  // Folds a k'-way packing of some vertices (kInvalidBlock = ordinary).
  static Prepacking from_packing(std::span<const Weight> weights, BlockId k_prime,
                                 std::vector<BlockId> packing_bin);

  BlockId k_prime() const { return static_cast<BlockId>(packing_loads.size()); }
  bool is_fixed(VertexId v) const { return side_of[v] != kFreeSide; }
  Weight max_side() const { return std::max(side_weight[0], side_weight[1]); }
  Weight max_packing() const;
};

struct DeepBalanceCheck {
  bool deeply_balanced = false;
  std::array<Weight, 2> makespan{0, 0};
  // Per vertex: block id within its side's LPT packing.
  std::vector<BlockId> bin_in_side;
};

// One-sided deep-balance test: LPT packs side 0 into k1 and side 1 into k2
// bins; true iff both makespans fit L(k). A false result may be a false
// negative.
DeepBalanceCheck check_deep_balance(const BalanceContext& ctx, std::span<const Weight> weights,
                                    std::span<const BlockId> side_of, BlockId k1, BlockId k2);

enum class BalanceRule {
  kAuto,         // even k' -> kEven, odd k' -> kGeneralized
  kEven,         // (2/k')·max(P) + AF_{k'/2}(A_t) <= L(k), one t from max(P)
  kGeneralized,  // per side: c(P_s)/k_s + AF_{k_s}(A_{t_s}) <= L(k)
};

// Balance-property test. `index` orders all vertices of the subhypergraph by
// decreasing weight; the prepacking's ordinary vertices are those not fixed.
// An unreachable threshold takes every remaining vertex for A_t.
bool satisfies_balance_property(const Prepacking& prepacking, const WeightIndex& index,
                                std::span<const Weight> weights, const BalanceContext& ctx,
                                const BipartitionBounds& bounds,
                                BalanceRule rule = BalanceRule::kAuto);

// Builds a prepacking of the heaviest vertices: LPT-packs vertices into k'
// bins in decreasing weight order and returns the first folded prepacking that
// satisfies the balance property. If none does, every vertex is fixed and
// `exhausted` is set.
Prepacking compute_prepacking(const BalanceContext& ctx, std::span<const Weight> weights,
                              const BipartitionBounds& bounds);

}  // namespace wpart
