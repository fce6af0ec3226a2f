#pragma once

#include <span>
#include <vector>

#include "wpart/types.h"

namespace wpart {

// Immutable weighted hypergraph stored as two CSR arrays (net -> pins and
// vertex -> incident nets). Safe for concurrent readers.
class Hypergraph {
 public:
  Hypergraph() = default;

  std::size_t num_vertices() const { return vertex_weights_.size(); }
  std::size_t num_nets() const { return net_weights_.size(); }
  std::size_t num_pins() const { return pins_.size(); }

  Weight vertex_weight(VertexId v) const { return vertex_weights_[v]; }
  Weight net_weight(NetId e) const { return net_weights_[e]; }
  Weight total_weight() const { return total_weight_; }
  Weight max_vertex_weight() const { return max_vertex_weight_; }

  std::span<const Weight> vertex_weights() const { return vertex_weights_; }
  std::span<const Weight> net_weights() const { return net_weights_; }

  std::span<const VertexId> pins(NetId e) const {
    return {pins_.data() + net_offsets_[e], pins_.data() + net_offsets_[e + 1]};
  }
  std::size_t net_size(NetId e) const { return net_offsets_[e + 1] - net_offsets_[e]; }

  std::span<const NetId> incident_nets(VertexId v) const {
    return {incident_.data() + vertex_offsets_[v], incident_.data() + vertex_offsets_[v + 1]};
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.vertex_weights_ == b.vertex_weights_ && a.net_weights_ == b.net_weights_ &&
           a.net_offsets_ == b.net_offsets_ && a.pins_ == b.pins_;
  }

 private:
  friend class HypergraphBuilder;

  std::vector<Weight> vertex_weights_;
  std::vector<Weight> net_weights_;
  std::vector<std::size_t> net_offsets_{0};
  std::vector<VertexId> pins_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<NetId> incident_;
  Weight total_weight_ = 0;
  Weight max_vertex_weight_ = 0;
};

// Validates and builds a hypergraph. Throws Error on non-positive weights,
// empty nets, out-of-range pins and duplicate pins within a net.
Hypergraph build_hypergraph(std::vector<Weight> vertex_weights,
                            const std::vector<std::vector<VertexId>>& nets,
                            std::vector<Weight> net_weights);

// Incremental builder used on hot paths (coarsening, subhypergraphs) that
// already guarantee valid input; validation still runs in finalize().
class HypergraphBuilder {
 public:
  explicit HypergraphBuilder(std::vector<Weight> vertex_weights);
  void add_net(std::span<const VertexId> pins, Weight weight);
  Hypergraph finalize() &&;

 private:
  Hypergraph hg_;
};

// Sorted subset of a parent's vertex ids with the parent <-> local mapping.
class VertexSubset {
 public:
  VertexSubset(std::vector<VertexId> parent_ids, std::size_t parent_size);

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  VertexId parent_id(VertexId local) const { return ids_[local]; }
  std::span<const VertexId> parent_ids() const { return ids_; }
  bool contains(VertexId parent) const;
  // Local id of a parent vertex; throws if it is not in the subset.
  VertexId local_id(VertexId parent) const;

 private:
  std::vector<VertexId> ids_;
  std::vector<std::int64_t> local_;
};

// H restricted to the subset: nets become e ∩ V', empty intersections are
// dropped, single-pin residual nets are kept.
Hypergraph subhypergraph(const Hypergraph& hg, const VertexSubset& subset);

// k-way assignment with cached block weights.
class Partition {
 public:
  Partition(const Hypergraph& hg, BlockId k, std::vector<BlockId> block_of);
  // All vertices unassigned; set every block before reading weights.
  Partition(const Hypergraph& hg, BlockId k);

  BlockId k() const { return k_; }
  std::size_t size() const { return block_of_.size(); }
  BlockId block(VertexId v) const { return block_of_[v]; }
  std::span<const BlockId> assignment() const { return block_of_; }
  Weight block_weight(BlockId b) const { return block_weights_[b]; }
  std::span<const Weight> block_weights() const { return block_weights_; }
  Weight max_block_weight() const;
  std::size_t num_empty_blocks() const;

  void set_block(VertexId v, Weight w, BlockId b);
  void move(VertexId v, Weight w, BlockId to) { set_block(v, w, to); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.k_ == b.k_ && a.block_of_ == b.block_of_;
  }

 private:
  BlockId k_;
  std::vector<BlockId> block_of_;
  std::vector<Weight> block_weights_;
};

// (λ-1)(Π) = Σ_e (λ(e)-1)·ω(e).
Weight connectivity(const Hypergraph& hg, std::span<const BlockId> block_of);
inline Weight connectivity(const Hypergraph& hg, const Partition& p) {
  return connectivity(hg, p.assignment());
}

std::vector<Weight> block_weights(const Hypergraph& hg, std::span<const BlockId> block_of,
                                  BlockId k);
Weight max_block_weight(const Hypergraph& hg, std::span<const BlockId> block_of, BlockId k);

}  // namespace wpart
