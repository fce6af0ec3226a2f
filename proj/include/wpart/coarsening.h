#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wpart/hypergraph.h"
#include "wpart/random.h"

namespace wpart {

// One contraction round. `fixed` holds the side of each coarse vertex
// (kFreeSide for ordinary ones); fixed vertices are always singletons.
struct CoarseLevel {
  Hypergraph coarse;
  std::vector<VertexId> fine_to_coarse;
  std::vector<std::int8_t> fixed;
};

struct CoarseningConfig {
  std::size_t contraction_limit = 160;
  double min_shrink = 0.05;
  // Nets larger than this do not contribute to ratings.
  std::size_t max_rated_net_size = 1000;
};

// max(⌈c(V)/16⌉, heaviest ordinary vertex).
Weight coarsening_weight_cap(const Hypergraph& hg, std::span<const std::int8_t> fixed);

// Heavy-edge matching with rating Σ ω(e)/(|e|-1) over shared nets. Stops once
// the vertex count is at most the contraction limit or a round shrinks the
// hypergraph by less than `min_shrink`.
std::vector<CoarseLevel> coarsen(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                 Weight max_vertex_weight, Rng& rng,
                                 const CoarseningConfig& config = {});

// Contracts groups of vertices. Single-pin nets are dropped and parallel nets
// merged into one net carrying the summed weight.
CoarseLevel contract(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                     std::vector<VertexId> fine_to_coarse, std::size_t num_coarse);

// fine[v] = coarse[map[v]].
std::vector<BlockId> project(std::span<const BlockId> coarse_sides,
                             std::span<const VertexId> fine_to_coarse);

}  // namespace wpart
