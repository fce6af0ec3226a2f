#pragma once

#include <cstdint>
#include <vector>

#include "wpart/balance.h"
#include "wpart/multilevel.h"

namespace wpart {

struct RbConfig {
  MultilevelConfig multilevel;
  int threads = 1;
};

struct RbStats {
  std::size_t bipartitions = 0;           // multilevel_bipartition calls
  std::size_t prepacking_triggers = 0;    // deep-balance check failures
  std::size_t fixed_vertices = 0;         // summed over triggered bipartitions
  std::size_t triggered_vertices = 0;     // vertices of triggered bipartitions
  std::size_t fallbacks = 0;              // nodes that fell back to the inherited packing

  RbStats& operator+=(const RbStats& o);
  // Share of vertices fixed in bipartitions that needed a prepacking.
  double fixed_fraction() const;
};

// One record per bipartition step, in depth-first order.
struct RbNodeTrace {
  BlockId k_prime = 0;
  std::size_t num_vertices = 0;
  bool deep_balance_passed = false;  // first attempt
  bool prepacking_computed = false;
  bool fallback = false;
};

struct RbResult {
  std::vector<BlockId> block_of;
  RbStats stats;
  std::vector<RbNodeTrace> trace;
  // True when the top-level LPT packing fits L(k); every fallback then keeps
  // all blocks within L(k).
  bool certified = false;
};

// Recursive bipartitioning into ctx.k blocks. Each step bipartitions with the
// adaptive per-side bounds, checks deep balance with LPT and on failure
// restarts with a prepacking of the heaviest vertices fixed. If neither
// attempt certifies both sides, the step folds a k'-bin packing of its
// vertices inherited from the parent (LPT at the root).
RbResult recursive_bipartition(const Hypergraph& hg, const BalanceContext& ctx, std::uint64_t seed,
                               const RbConfig& config = {});
RbResult recursive_bipartition(const Hypergraph& hg, BlockId k, double epsilon, std::uint64_t seed,
                               const RbConfig& config = {});

struct PipelineReport {
  BlockId k = 1;
  BlockId k_prime = 1;
  double epsilon = 0.0;
  double epsilon_hat = 0.0;
  std::size_t removed = 0;
  Weight objective = 0;          // over V
  Weight objective_reduced = 0;  // over V \ V_R
  Weight alpha = 0;              // objective - objective_reduced
  std::vector<Weight> block_weights;
  Weight max_block_weight = 0;
  double l_k = 0.0;    // (1+ε)⌈c(V)/k⌉
  double l_lpt = 0.0;  // (1+ε)·LPT(V \ V_R, k')
  double l_max = 0.0;  // L(k) + max vertex weight
  bool balanced = false;
  bool certified = false;
  RbStats stats;
  double seconds = 0.0;
};

struct PipelineResult {
  std::vector<BlockId> block_of;
  PipelineReport report;
};

// Removes heavy vertices, partitions the rest with ε̂ and appends every removed
// vertex as its own block. `balanced` is re-verified from the final
// assignment: blocks of the reduced instance against L_LPT, removed
// singletons trivially.
PipelineResult partition_pipeline(const Hypergraph& hg, BlockId k, double epsilon,
                                  std::uint64_t seed, const RbConfig& config = {});

}  // namespace wpart
