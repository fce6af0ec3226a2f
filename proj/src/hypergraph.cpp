#include "wpart/hypergraph.h"

#include <algorithm>
#include <string>

namespace wpart {

namespace {

void finalize_incidence(std::size_t n, const std::vector<std::size_t>& net_offsets,
                        const std::vector<VertexId>& pins, std::vector<std::size_t>& vertex_offsets,
                        std::vector<NetId>& incident) {
  vertex_offsets.assign(n + 1, 0);
  for (VertexId v : pins) ++vertex_offsets[v + 1];
  for (std::size_t v = 0; v < n; ++v) vertex_offsets[v + 1] += vertex_offsets[v];
  incident.resize(pins.size());
  std::vector<std::size_t> cursor(vertex_offsets.begin(), vertex_offsets.end() - 1);
  const std::size_t m = net_offsets.size() - 1;
  for (std::size_t e = 0; e < m; ++e) {
    for (std::size_t i = net_offsets[e]; i < net_offsets[e + 1]; ++i) {
      incident[cursor[pins[i]]++] = static_cast<NetId>(e);
    }
  }
}

}  // namespace

HypergraphBuilder::HypergraphBuilder(std::vector<Weight> vertex_weights) {
  for (std::size_t v = 0; v < vertex_weights.size(); ++v) {
    if (vertex_weights[v] <= 0) {
      throw Error("non-positive weight " + std::to_string(vertex_weights[v]) + " for vertex " +
                  std::to_string(v));
    }
    hg_.total_weight_ = checked_add(hg_.total_weight_, vertex_weights[v]);
    hg_.max_vertex_weight_ = std::max(hg_.max_vertex_weight_, vertex_weights[v]);
  }
  hg_.vertex_weights_ = std::move(vertex_weights);
}

void HypergraphBuilder::add_net(std::span<const VertexId> pins, Weight weight) {
  const NetId e = static_cast<NetId>(hg_.net_weights_.size());
  if (weight <= 0) {
    throw Error("non-positive weight " + std::to_string(weight) + " for net " + std::to_string(e));
  }
  if (pins.empty()) throw Error("empty net " + std::to_string(e));
  const std::size_t n = hg_.vertex_weights_.size();
  for (VertexId v : pins) {
    if (v >= n) {
      throw Error("pin " + std::to_string(v) + " of net " + std::to_string(e) +
                  " out of range (n=" + std::to_string(n) + ")");
    }
  }
  hg_.pins_.insert(hg_.pins_.end(), pins.begin(), pins.end());
  hg_.net_offsets_.push_back(hg_.pins_.size());
  hg_.net_weights_.push_back(weight);
}

Hypergraph HypergraphBuilder::finalize() && {
  // Duplicate check with a per-vertex stamp: O(pins).
  std::vector<NetId> stamp(hg_.vertex_weights_.size(), std::numeric_limits<NetId>::max());
  for (NetId e = 0; e < hg_.net_weights_.size(); ++e) {
    for (VertexId v : hg_.pins(e)) {
      if (stamp[v] == e) {
        throw Error("duplicate pin " + std::to_string(v) + " in net " + std::to_string(e));
      }
      stamp[v] = e;
    }
  }
  finalize_incidence(hg_.vertex_weights_.size(), hg_.net_offsets_, hg_.pins_, hg_.vertex_offsets_,
                     hg_.incident_);
  return std::move(hg_);
}

Hypergraph build_hypergraph(std::vector<Weight> vertex_weights,
                            const std::vector<std::vector<VertexId>>& nets,
                            std::vector<Weight> net_weights) {
  if (nets.size() != net_weights.size()) {
    throw Error("net count " + std::to_string(nets.size()) + " does not match net weight count " +
                std::to_string(net_weights.size()));
  }
  HypergraphBuilder builder(std::move(vertex_weights));
  for (std::size_t e = 0; e < nets.size(); ++e) builder.add_net(nets[e], net_weights[e]);
  return std::move(builder).finalize();
}

VertexSubset::VertexSubset(std::vector<VertexId> parent_ids, std::size_t parent_size)
    : ids_(std::move(parent_ids)), local_(parent_size, -1) {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (ids_[i] >= parent_size) throw Error("subset id out of range");
    if (i > 0 && ids_[i] <= ids_[i - 1]) throw Error("subset ids must be strictly increasing");
    local_[ids_[i]] = static_cast<std::int64_t>(i);
  }
}

bool VertexSubset::contains(VertexId parent) const {
  return parent < local_.size() && local_[parent] >= 0;
}

VertexId VertexSubset::local_id(VertexId parent) const {
  if (!contains(parent)) throw Error("vertex " + std::to_string(parent) + " not in subset");
  return static_cast<VertexId>(local_[parent]);
}

Hypergraph subhypergraph(const Hypergraph& hg, const VertexSubset& subset) {
  if (subset.empty()) throw Error("empty vertex subset");
  std::vector<Weight> weights(subset.size());
  for (std::size_t i = 0; i < subset.size(); ++i) {
    weights[i] = hg.vertex_weight(subset.parent_id(static_cast<VertexId>(i)));
  }
  HypergraphBuilder builder(std::move(weights));
  std::vector<VertexId> pins;
  for (NetId e = 0; e < hg.num_nets(); ++e) {
    pins.clear();
    for (VertexId v : hg.pins(e)) {
      if (subset.contains(v)) pins.push_back(subset.local_id(v));
    }
    if (!pins.empty()) builder.add_net(pins, hg.net_weight(e));
  }
  return std::move(builder).finalize();
}

Partition::Partition(const Hypergraph& hg, BlockId k, std::vector<BlockId> block_of)
    : k_(k), block_of_(std::move(block_of)), block_weights_(static_cast<std::size_t>(k), 0) {
  if (k < 1) throw Error("k must be at least 1");
  if (block_of_.size() != hg.num_vertices()) {
    throw Error("partition size " + std::to_string(block_of_.size()) +
                " does not match vertex count " + std::to_string(hg.num_vertices()));
  }
  for (VertexId v = 0; v < block_of_.size(); ++v) {
    const BlockId b = block_of_[v];
    if (b < 0 || b >= k) {
      throw Error("block id " + std::to_string(b) + " of vertex " + std::to_string(v) +
                  " outside [0, " + std::to_string(k) + ")");
    }
    block_weights_[b] = checked_add(block_weights_[b], hg.vertex_weight(v));
  }
}

Partition::Partition(const Hypergraph& hg, BlockId k)
    : k_(k), block_of_(hg.num_vertices(), kInvalidBlock), block_weights_(static_cast<std::size_t>(k), 0) {
  if (k < 1) throw Error("k must be at least 1");
}

Weight Partition::max_block_weight() const {
  return *std::max_element(block_weights_.begin(), block_weights_.end());
}

std::size_t Partition::num_empty_blocks() const {
  return static_cast<std::size_t>(std::count(block_weights_.begin(), block_weights_.end(), 0));
}

void Partition::set_block(VertexId v, Weight w, BlockId b) {
  const BlockId from = block_of_[v];
  if (from == b) return;
  if (from != kInvalidBlock) block_weights_[from] -= w;
  block_weights_[b] += w;
  block_of_[v] = b;
}

Weight connectivity(const Hypergraph& hg, std::span<const BlockId> block_of) {
  if (block_of.size() != hg.num_vertices()) throw Error("partition does not cover hypergraph");
  Weight total = 0;
  std::vector<BlockId> seen;
  for (NetId e = 0; e < hg.num_nets(); ++e) {
    seen.clear();
    for (VertexId v : hg.pins(e)) {
      const BlockId b = block_of[v];
      if (std::find(seen.begin(), seen.end(), b) == seen.end()) seen.push_back(b);
    }
    total = checked_add(total, static_cast<Weight>(seen.size() - 1) * hg.net_weight(e));
  }
  return total;
}

std::vector<Weight> block_weights(const Hypergraph& hg, std::span<const BlockId> block_of,
                                  BlockId k) {
  std::vector<Weight> weights(static_cast<std::size_t>(k), 0);
  for (VertexId v = 0; v < block_of.size(); ++v) {
    weights[block_of[v]] = checked_add(weights[block_of[v]], hg.vertex_weight(v));
  }
  return weights;
}

Weight max_block_weight(const Hypergraph& hg, std::span<const BlockId> block_of, BlockId k) {
  const auto w = block_weights(hg, block_of, k);
  return *std::max_element(w.begin(), w.end());
}

}  // namespace wpart
