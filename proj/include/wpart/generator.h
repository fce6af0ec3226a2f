#pragma once

#include <cstdint>

#include "wpart/hypergraph.h"

namespace wpart {

struct ArtificialInstance {
  Hypergraph hypergraph;
  double heavy_probability = 0.0;
  Weight max_heavy_weight = 0;  // W
  bool clamped = false;         // the formula gave W < 1
  std::size_t heavy_count = 0;  // vertices drawn heavy (their weight may still be 1)
  Weight heavy_total = 0;
};

// Keeps the base nets. Each vertex independently becomes heavy with
// probability 120/n and then draws its weight uniformly from [1, W] with
// W = (n-120)/60 - 1 (integer division, at least 1); all others weigh 1.
// In expectation heavy and unit vertices then carry the same total weight.
ArtificialInstance generate_artificial(const Hypergraph& base, std::uint64_t seed);

// Unit-weight netlist-like hypergraph: n nets, each anchored at a random
// driver with mostly nearby sinks and geometric net sizes.
Hypergraph generate_circuit(std::size_t num_vertices, std::uint64_t seed);

}  // namespace wpart
