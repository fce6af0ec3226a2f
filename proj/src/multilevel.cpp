#include "wpart/multilevel.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "wpart/prepack.h"

namespace wpart {

namespace {

std::array<Weight, 2> fixed_weights(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                    std::vector<BlockId>& side) {
  std::array<Weight, 2> w{0, 0};
  side.assign(hg.num_vertices(), kInvalidBlock);
  for (VertexId v = 0; v < hg.num_vertices(); ++v) {
    if (fixed[v] != kFreeSide) {
      side[v] = fixed[v];
      w[fixed[v]] += hg.vertex_weight(v);
    }
  }
  return w;
}

std::vector<VertexId> free_vertices(std::span<const std::int8_t> fixed) {
  std::vector<VertexId> free;
  for (VertexId v = 0; v < fixed.size(); ++v) {
    if (fixed[v] == kFreeSide) free.push_back(v);
  }
  return free;
}

// Side with the smaller fill ratio after adding w.
int emptier_side(const std::array<Weight, 2>& load, const std::array<Weight, 2>& capacity, Weight w) {
  const __int128 lhs = static_cast<__int128>(load[0] + w) * std::max<Weight>(capacity[1], 1);
  const __int128 rhs = static_cast<__int128>(load[1] + w) * std::max<Weight>(capacity[0], 1);
  return lhs <= rhs ? 0 : 1;
}

void grow(const Hypergraph& hg, std::vector<BlockId>& side, std::array<Weight, 2>& load,
          const std::array<Weight, 2>& capacity, std::span<const VertexId> free, Rng& rng) {
  const int grown = rng.flip() ? 0 : 1;
  const int rest = 1 - grown;
  Weight free_total = 0;
  for (VertexId v : free) free_total += hg.vertex_weight(v);
  const Weight total = free_total + load[0] + load[1];
  const Weight target = static_cast<Weight>(static_cast<long double>(total) * capacity[grown] /
                                            std::max<Weight>(capacity[0] + capacity[1], 1));
  std::vector<std::uint8_t> visited(hg.num_vertices(), 0);
  std::vector<VertexId> seeds(free.begin(), free.end());
  rng.shuffle(std::span<VertexId>(seeds));
  std::size_t next_seed = 0;
  std::deque<VertexId> queue;
  while (load[grown] < target) {
    if (queue.empty()) {
      while (next_seed < seeds.size() && visited[seeds[next_seed]]) ++next_seed;
      if (next_seed == seeds.size()) break;
      visited[seeds[next_seed]] = 1;
      queue.push_back(seeds[next_seed]);
    }
    const VertexId u = queue.front();
    queue.pop_front();
    if (load[grown] + hg.vertex_weight(u) > capacity[grown]) continue;
    side[u] = grown;
    load[grown] += hg.vertex_weight(u);
    for (NetId e : hg.incident_nets(u)) {
      for (VertexId v : hg.pins(e)) {
        if (!visited[v] && side[v] == kInvalidBlock) {
          visited[v] = 1;
          queue.push_back(v);
        }
      }
    }
  }
  for (VertexId v : free) {
    if (side[v] == kInvalidBlock) {
      side[v] = rest;
      load[rest] += hg.vertex_weight(v);
    }
  }
}

}  // namespace

Bipartition evaluate_bipartition(const Hypergraph& hg, std::vector<BlockId> side,
                                 const std::array<Weight, 2>& capacity) {
  Bipartition b;
  for (VertexId v = 0; v < hg.num_vertices(); ++v) b.side_weight[side[v]] += hg.vertex_weight(v);
  b.objective = connectivity(hg, side);
  b.overload = overload(b.side_weight, capacity);
  b.side = std::move(side);
  return b;
}

std::vector<BlockId> initial_candidate(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                       const std::array<Weight, 2>& capacity,
                                       InitialStrategy strategy, Rng& rng) {
  std::vector<BlockId> side;
  auto load = fixed_weights(hg, fixed, side);
  auto free = free_vertices(fixed);
  rng.shuffle(std::span<VertexId>(free));
  switch (strategy) {
    case InitialStrategy::kRandom:
      for (VertexId v : free) {
        const int s = emptier_side(load, capacity, hg.vertex_weight(v));
        side[v] = s;
        load[s] += hg.vertex_weight(v);
      }
      break;
    case InitialStrategy::kGrowing:
      grow(hg, side, load, capacity, free, rng);
      break;
    case InitialStrategy::kLptFold:
      std::stable_sort(free.begin(), free.end(), [&](VertexId a, VertexId b) {
        return hg.vertex_weight(a) > hg.vertex_weight(b);
      });
      for (VertexId v : free) {
        const int s = capacity[0] - load[0] >= capacity[1] - load[1] ? 0 : 1;
        side[v] = s;
        load[s] += hg.vertex_weight(v);
      }
      break;
  }
  return side;
}

Bipartition initial_bipartition(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                const std::array<Weight, 2>& capacity, std::uint64_t seed,
                                const MultilevelConfig& config) {
  const FmConfig fm{config.max_passes, 0, false};
  Bipartition best;
  bool have = false;
  const int trials = std::max(1, config.trials);
  for (int t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(t)));
    auto side = initial_candidate(hg, fixed, capacity, static_cast<InitialStrategy>(t % 3), rng);
    fm_refine(hg, side, fixed, capacity, fm);
    auto candidate = evaluate_bipartition(hg, std::move(side), capacity);
    if (!have || candidate.overload < best.overload ||
        (candidate.overload == best.overload && candidate.objective < best.objective)) {
      best = std::move(candidate);
      have = true;
    }
  }
  return best;
}

Bipartition multilevel_bipartition(const Hypergraph& hg, const std::array<Weight, 2>& capacity,
                                   std::span<const std::int8_t> fixed, std::uint64_t seed,
                                   const MultilevelConfig& config) {
  std::vector<std::int8_t> no_fixed;
  if (fixed.empty()) {
    no_fixed.assign(hg.num_vertices(), kFreeSide);
    fixed = no_fixed;
  }
  if (fixed.size() != hg.num_vertices()) throw Error("multilevel_bipartition: fixed size mismatch");
  if (hg.num_vertices() == 0) return Bipartition{};

  Rng rng(mix_seed(seed, 0x636f61727365ULL));
  CoarseningConfig cc;
  cc.contraction_limit = config.contraction_limit;
  const auto levels = coarsen(hg, fixed, coarsening_weight_cap(hg, fixed), rng, cc);

  const Hypergraph& coarsest = levels.empty() ? hg : levels.back().coarse;
  const std::span<const std::int8_t> coarsest_fixed =
      levels.empty() ? fixed : std::span<const std::int8_t>(levels.back().fixed);
  Bipartition current = initial_bipartition(coarsest, coarsest_fixed, capacity,
                                            mix_seed(seed, 0x696e6974ULL), config);

  const FmConfig fm{config.max_passes, 0, config.verify};
  auto side = std::move(current.side);
  for (std::size_t i = levels.size(); i-- > 0;) {
    const Hypergraph& finer = i == 0 ? hg : levels[i - 1].coarse;
    const std::span<const std::int8_t> finer_fixed =
        i == 0 ? fixed : std::span<const std::int8_t>(levels[i - 1].fixed);
    side = project(side, levels[i].fine_to_coarse);
    fm_refine(finer, side, finer_fixed, capacity, fm);
  }
  return evaluate_bipartition(hg, std::move(side), capacity);
}

}  // namespace wpart
