#include "wpart/generator.h"

#include <algorithm>
#include <cmath>

#include "wpart/random.h"

namespace wpart {

ArtificialInstance generate_artificial(const Hypergraph& base, std::uint64_t seed) {
  const std::size_t n = base.num_vertices();
  if (n <= 120) throw Error("artificial instances need more than 120 vertices (got " + std::to_string(n) + ")");
  ArtificialInstance out;
  out.heavy_probability = 120.0 / static_cast<double>(n);
  const Weight raw = static_cast<Weight>((n - 120) / 60) - 1;
  out.clamped = raw < 1;
  out.max_heavy_weight = std::max<Weight>(1, raw);

  Rng rng(seed);
  std::vector<Weight> weights(n, 1);
  for (auto& w : weights) {
    if (rng.unit() < out.heavy_probability) {
      w = rng.uniform(1, out.max_heavy_weight);
      ++out.heavy_count;
      out.heavy_total += w;
    }
  }
  HypergraphBuilder builder(std::move(weights));
  for (NetId e = 0; e < base.num_nets(); ++e) builder.add_net(base.pins(e), base.net_weight(e));
  out.hypergraph = std::move(builder).finalize();
  return out;
}

Hypergraph generate_circuit(std::size_t num_vertices, std::uint64_t seed) {
  if (num_vertices < 2) throw Error("circuit generator needs at least 2 vertices");
  Rng rng(seed);
  const auto n = static_cast<std::int64_t>(num_vertices);
  const std::int64_t window = std::max<std::int64_t>(4, static_cast<std::int64_t>(std::sqrt(static_cast<double>(n))));
  HypergraphBuilder builder(std::vector<Weight>(num_vertices, 1));
  std::vector<VertexId> pins;
  for (std::size_t e = 0; e < num_vertices; ++e) {
    std::size_t size = 2;
    while (size < 40 && rng.unit() < 0.45) ++size;
    size = std::min(size, num_vertices);
    const std::int64_t driver = static_cast<std::int64_t>(rng.below(num_vertices));
    pins.assign(1, static_cast<VertexId>(driver));
    while (pins.size() < size) {
      std::int64_t v;
      if (rng.unit() < 0.1) {
        v = static_cast<std::int64_t>(rng.below(num_vertices));
      } else {
        v = ((driver + rng.uniform(-window, window)) % n + n) % n;
      }
      if (std::find(pins.begin(), pins.end(), static_cast<VertexId>(v)) == pins.end()) {
        pins.push_back(static_cast<VertexId>(v));
      }
    }
    builder.add_net(pins, 1);
  }
  return std::move(builder).finalize();
}

}  // namespace wpart
