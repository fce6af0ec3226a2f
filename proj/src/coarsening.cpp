#include "wpart/coarsening.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "wpart/prepack.h"

namespace wpart {

namespace {

constexpr VertexId kUnmatched = std::numeric_limits<VertexId>::max();

std::uint64_t hash_pins(std::span<const VertexId> pins) {
  std::uint64_t h = pins.size();
  for (VertexId v : pins) h = mix_seed(h, v);
  return h;
}

}  // namespace

Weight coarsening_weight_cap(const Hypergraph& hg, std::span<const std::int8_t> fixed) {
  Weight heaviest = 0;
  for (VertexId v = 0; v < hg.num_vertices(); ++v) {
    if (fixed[v] == kFreeSide) heaviest = std::max(heaviest, hg.vertex_weight(v));
  }
  return std::max(ceil_div(hg.total_weight(), 16), heaviest);
}

CoarseLevel contract(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                     std::vector<VertexId> fine_to_coarse, std::size_t num_coarse) {
  std::vector<Weight> weights(num_coarse, 0);
  std::vector<std::int8_t> coarse_fixed(num_coarse, kFreeSide);
  for (VertexId v = 0; v < hg.num_vertices(); ++v) {
    weights[fine_to_coarse[v]] += hg.vertex_weight(v);
    if (fixed[v] != kFreeSide) coarse_fixed[fine_to_coarse[v]] = fixed[v];
  }

  // Collect contracted nets, then merge identical pin sets.
  std::vector<VertexId> pins;
  std::vector<std::size_t> offsets{0};
  std::vector<Weight> net_weights;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  std::vector<NetId> stamp(num_coarse, std::numeric_limits<NetId>::max());
  for (NetId e = 0; e < hg.num_nets(); ++e) {
    const std::size_t begin = pins.size();
    for (VertexId v : hg.pins(e)) {
      const VertexId c = fine_to_coarse[v];
      if (stamp[c] == e) continue;
      stamp[c] = e;
      pins.push_back(c);
    }
    if (pins.size() - begin < 2) {
      pins.resize(begin);
      continue;
    }
    std::sort(pins.begin() + static_cast<std::ptrdiff_t>(begin), pins.end());
    const std::span<const VertexId> mine(pins.data() + begin, pins.size() - begin);
    auto& bucket = buckets[hash_pins(mine)];
    bool merged = false;
    for (std::size_t other : bucket) {
      const std::span<const VertexId> theirs(pins.data() + offsets[other],
                                             offsets[other + 1] - offsets[other]);
      if (std::equal(mine.begin(), mine.end(), theirs.begin(), theirs.end())) {
        net_weights[other] += hg.net_weight(e);
        merged = true;
        break;
      }
    }
    if (merged) {
      pins.resize(begin);
      continue;
    }
    bucket.push_back(net_weights.size());
    net_weights.push_back(hg.net_weight(e));
    offsets.push_back(pins.size());
  }

  HypergraphBuilder builder(std::move(weights));
  for (std::size_t e = 0; e < net_weights.size(); ++e) {
    builder.add_net(std::span<const VertexId>(pins.data() + offsets[e], offsets[e + 1] - offsets[e]),
                    net_weights[e]);
  }
  return CoarseLevel{std::move(builder).finalize(), std::move(fine_to_coarse),
                     std::move(coarse_fixed)};
}

std::vector<CoarseLevel> coarsen(const Hypergraph& hg, std::span<const std::int8_t> fixed,
                                 Weight max_vertex_weight, Rng& rng,
                                 const CoarseningConfig& config) {
  std::vector<CoarseLevel> levels;
  const Hypergraph* current = &hg;
  std::span<const std::int8_t> current_fixed = fixed;
  std::vector<double> rating;
  std::vector<VertexId> touched;

  while (current->num_vertices() > config.contraction_limit) {
    const std::size_t n = current->num_vertices();
    std::vector<VertexId> partner(n, kUnmatched);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    rng.shuffle(std::span<VertexId>(order));
    rating.assign(n, 0.0);

    for (VertexId u : order) {
      if (partner[u] != kUnmatched || current_fixed[u] != kFreeSide) continue;
      for (NetId e : current->incident_nets(u)) {
        const std::size_t size = current->net_size(e);
        if (size < 2 || size > config.max_rated_net_size) continue;
        const double r = static_cast<double>(current->net_weight(e)) / static_cast<double>(size - 1);
        for (VertexId v : current->pins(e)) {
          if (v == u || partner[v] != kUnmatched || current_fixed[v] != kFreeSide) continue;
          if (rating[v] == 0.0) touched.push_back(v);
          rating[v] += r;
        }
      }
      VertexId best = kUnmatched;
      double best_rating = 0.0;
      const Weight wu = current->vertex_weight(u);
      for (VertexId v : touched) {
        if (wu + current->vertex_weight(v) <= max_vertex_weight &&
            (rating[v] > best_rating ||
             (rating[v] == best_rating && best != kUnmatched &&
              current->vertex_weight(v) < current->vertex_weight(best)))) {
          best = v;
          best_rating = rating[v];
        }
        rating[v] = 0.0;
      }
      touched.clear();
      if (best != kUnmatched) {
        partner[u] = best;
        partner[best] = u;
      }
    }

    std::vector<VertexId> map(n, kUnmatched);
    std::size_t num_coarse = 0;
    for (VertexId v = 0; v < n; ++v) {
      if (map[v] != kUnmatched) continue;
      map[v] = static_cast<VertexId>(num_coarse);
      if (partner[v] != kUnmatched) map[partner[v]] = static_cast<VertexId>(num_coarse);
      ++num_coarse;
    }
    if (num_coarse == n) break;
    levels.push_back(contract(*current, current_fixed, std::move(map), num_coarse));
    current = &levels.back().coarse;
    current_fixed = levels.back().fixed;
    const double shrink = 1.0 - static_cast<double>(num_coarse) / static_cast<double>(n);
    if (shrink < config.min_shrink) break;
  }
  return levels;
}

std::vector<BlockId> project(std::span<const BlockId> coarse_sides,
                             std::span<const VertexId> fine_to_coarse) {
  std::vector<BlockId> fine(fine_to_coarse.size());
  for (std::size_t v = 0; v < fine.size(); ++v) fine[v] = coarse_sides[fine_to_coarse[v]];
  return fine;
}

}  // namespace wpart
