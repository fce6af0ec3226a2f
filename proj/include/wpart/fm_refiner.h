#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wpart/hypergraph.h"

namespace wpart {

struct FmConfig {
  int max_passes = 10;
  // Non-improving moves tolerated before a pass stops; 0 picks a size-based default.
  std::size_t stall_limit = 0;
  // Recompute the objective from scratch after every pass.
  bool verify = false;
};

struct FmPassTrace {
  Weight objective_before = 0;
  Weight objective_after = 0;       // incremental bookkeeping
  Weight objective_recomputed = -1;  // only with FmConfig::verify
  Weight overload_after = 0;
  std::size_t moves_kept = 0;
};

struct FmResult {
  Weight objective = 0;
  Weight overload = 0;  // Σ_s max(0, c(V_s) - capacity_s)
  std::vector<FmPassTrace> passes;
  bool balanced() const { return overload == 0; }
};

Weight overload(const std::array<Weight, 2>& side_weight, const std::array<Weight, 2>& capacity);

// Two-way FM local search over `side` (values 0/1). Vertices with
// fixed[v] != kFreeSide never move. Within a pass a move may overload a side
// temporarily; while overloaded, only moves out of the overloaded side that do
// not increase the overload are taken. Each pass rolls back to its best prefix
// by (overload, objective), so a balanced input stays balanced and its
// objective never increases.
FmResult fm_refine(const Hypergraph& hg, std::vector<BlockId>& side,
                   std::span<const std::int8_t> fixed, const std::array<Weight, 2>& capacity,
                   const FmConfig& config = {});

}  // namespace wpart
