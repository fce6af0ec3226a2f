#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "wpart/coarsening.h"
#include "wpart/fm_refiner.h"

namespace wpart {

struct MultilevelConfig {
  int trials = 16;
  int max_passes = 10;
  std::size_t contraction_limit = 160;
  bool verify = false;
};

struct Bipartition {
  std::vector<BlockId> side;
  std::array<Weight, 2> side_weight{0, 0};
  Weight objective = 0;
  Weight overload = 0;
  bool balanced() const { return overload == 0; }
};

enum class InitialStrategy { kRandom, kGrowing, kLptFold };

// A single unrefined candidate; fixed vertices keep their side.
std::vector<BlockId> initial_candidate(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                       const std::array<Weight, 2>& capacity,
                                       InitialStrategy strategy, Rng& rng);

// Best of `trials` FM-refined candidates (strategies cycle through random,
// growing and LPT fold) by (overload, objective).
Bipartition initial_bipartition(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                const std::array<Weight, 2>& capacity, std::uint64_t seed,
                                const MultilevelConfig& config = {});

// Coarsen, bipartition the coarsest level, then project and refine level by
// level. `fixed` may be empty (no fixed vertices).
Bipartition multilevel_bipartition(const Hypergraph& hg, const std::array<Weight, 2>& capacity,
                                   std::span<const std::int8_t> fixed, std::uint64_t seed,
                                   const MultilevelConfig& config = {});

Bipartition evaluate_bipartition(const Hypergraph& hg, std::vector<BlockId> side,
                                 const std::array<Weight, 2>& capacity);

}  // namespace wpart
