#include "wpart/fm_refiner.h"

#include <algorithm>

#include "wpart/addressable_heap.h"
#include "wpart/prepack.h"

namespace wpart {

Weight overload(const std::array<Weight, 2>& side_weight, const std::array<Weight, 2>& capacity) {
  return std::max<Weight>(0, side_weight[0] - capacity[0]) +
         std::max<Weight>(0, side_weight[1] - capacity[1]);
}

namespace {

struct Key {
  Weight overload;
  Weight objective;
  friend bool operator<(const Key& a, const Key& b) {
    return a.overload != b.overload ? a.overload < b.overload : a.objective < b.objective;
  }
};

class Refiner {
 public:
  Refiner(const Hypergraph& hg, std::vector<BlockId>& side, std::span<const std::int8_t> fixed,
          const std::array<Weight, 2>& capacity)
      : hg_(hg), side_(side), fixed_(fixed), capacity_(capacity),
        pin_count_(hg.num_nets(), {0, 0}), heap_{AddressableMaxHeap(hg.num_vertices()),
                                                 AddressableMaxHeap(hg.num_vertices())} {
    for (NetId e = 0; e < hg.num_nets(); ++e) {
      for (VertexId v : hg.pins(e)) ++pin_count_[e][side_[v]];
      if (pin_count_[e][0] > 0 && pin_count_[e][1] > 0) objective_ += hg.net_weight(e);
    }
    for (VertexId v = 0; v < hg.num_vertices(); ++v) weight_[side_[v]] += hg.vertex_weight(v);
  }

  Weight objective() const { return objective_; }
  Weight current_overload() const { return overload(weight_, capacity_); }

  // Runs one pass; returns the number of moves kept.
  std::size_t pass(std::size_t stall_limit) {
    const std::size_t n = hg_.num_vertices();
    heap_[0].reset(n);
    heap_[1].reset(n);
    for (VertexId v = 0; v < n; ++v) {
      if (fixed_[v] == kFreeSide) heap_[side_[v]].push(v, gain(v));
    }
    moves_.clear();
    Key best{current_overload(), objective_};
    std::size_t best_prefix = 0;
    std::size_t stall = 0;

    while (stall < stall_limit) {
      const int from = pick_side();
      if (from < 0) break;
      const VertexId v = heap_[from].top();
      const Weight g = heap_[from].top_key();
      heap_[from].pop();
      apply_move(v, 1 - from, true);
      objective_ -= g;
      moves_.push_back(v);
      const Key now{current_overload(), objective_};
      if (now < best) {
        best = now;
        best_prefix = moves_.size();
        stall = 0;
      } else {
        ++stall;
      }
    }

    while (moves_.size() > best_prefix) {
      const VertexId v = moves_.back();
      moves_.pop_back();
      apply_move(v, 1 - side_[v], false);
    }
    objective_ = best.objective;
    return best_prefix;
  }

 private:
  Weight gain(VertexId v) const {
    const int s = side_[v];
    Weight g = 0;
    for (NetId e : hg_.incident_nets(v)) {
      if (pin_count_[e][s] == 1) g += hg_.net_weight(e);
      if (pin_count_[e][1 - s] == 0) g -= hg_.net_weight(e);
    }
    return g;
  }

  Weight overload_after(VertexId v, int from) const {
    std::array<Weight, 2> w = weight_;
    w[from] -= hg_.vertex_weight(v);
    w[1 - from] += hg_.vertex_weight(v);
    return overload(w, capacity_);
  }

  // Returns the side to move from, or -1. From a balanced state any move is
  // tentatively allowed; while overloaded only moves out of an overloaded side
  // that do not increase the overload are. Best-prefix rollback keeps the
  // final state within bound whenever the pass started within bound.
  int pick_side() {
    const Weight current = current_overload();
    if (current > 0) {
      for (int s = 0; s < 2; ++s) {
        if (weight_[s] <= capacity_[s]) continue;
        while (!heap_[s].empty() && overload_after(heap_[s].top(), s) > current) heap_[s].pop();
        if (!heap_[s].empty()) return s;
      }
      return -1;
    }
    const bool ok0 = !heap_[0].empty();
    const bool ok1 = !heap_[1].empty();
    if (ok0 && ok1) {
      const Weight g0 = heap_[0].top_key();
      const Weight g1 = heap_[1].top_key();
      if (g0 != g1) return g0 > g1 ? 0 : 1;
      // Tie: move out of the relatively heavier side.
      const __int128 lhs = static_cast<__int128>(weight_[0]) * std::max<Weight>(capacity_[1], 1);
      const __int128 rhs = static_cast<__int128>(weight_[1]) * std::max<Weight>(capacity_[0], 1);
      return lhs >= rhs ? 0 : 1;
    }
    if (ok0) return 0;
    if (ok1) return 1;
    return -1;
  }

  void bump(VertexId u, Weight delta) {
    const int s = side_[u];
    if (heap_[s].contains(u)) heap_[s].add_delta(u, delta);
  }

  void apply_move(VertexId v, int to, bool update_gains) {
    const int from = 1 - to;
    const Weight wv = hg_.vertex_weight(v);
    weight_[from] -= wv;
    weight_[to] += wv;
    side_[v] = to;
    for (NetId e : hg_.incident_nets(v)) {
      const std::uint32_t to_before = pin_count_[e][to];
      --pin_count_[e][from];
      ++pin_count_[e][to];
      const std::uint32_t from_after = pin_count_[e][from];
      if (!update_gains || hg_.net_size(e) < 2) continue;
      const Weight w = hg_.net_weight(e);
      if (to_before == 0) {
        for (VertexId u : hg_.pins(e)) {
          if (u != v) bump(u, w);
        }
      } else if (to_before == 1) {
        for (VertexId u : hg_.pins(e)) {
          if (u != v && side_[u] == to) bump(u, -w);
        }
      }
      if (from_after == 0) {
        for (VertexId u : hg_.pins(e)) {
          if (u != v) bump(u, -w);
        }
      } else if (from_after == 1) {
        for (VertexId u : hg_.pins(e)) {
          if (side_[u] == from) bump(u, w);
        }
      }
    }
  }

  const Hypergraph& hg_;
  std::vector<BlockId>& side_;
  std::span<const std::int8_t> fixed_;
  std::array<Weight, 2> capacity_;
  std::vector<std::array<std::uint32_t, 2>> pin_count_;
  std::array<AddressableMaxHeap, 2> heap_;
  std::array<Weight, 2> weight_{0, 0};
  Weight objective_ = 0;
  std::vector<VertexId> moves_;
};

}  // namespace

FmResult fm_refine(const Hypergraph& hg, std::vector<BlockId>& side,
                   std::span<const std::int8_t> fixed, const std::array<Weight, 2>& capacity,
                   const FmConfig& config) {
  if (side.size() != hg.num_vertices() || fixed.size() != hg.num_vertices()) {
    throw Error("fm_refine: size mismatch");
  }
  Refiner refiner(hg, side, fixed, capacity);
  const std::size_t stall_limit =
      config.stall_limit > 0 ? config.stall_limit
                             : std::max<std::size_t>(64, hg.num_vertices() / 8);
  FmResult result;
  for (int p = 0; p < config.max_passes; ++p) {
    FmPassTrace trace;
    trace.objective_before = refiner.objective();
    const Weight overload_before = refiner.current_overload();
    trace.moves_kept = refiner.pass(stall_limit);
    trace.objective_after = refiner.objective();
    trace.overload_after = refiner.current_overload();
    if (config.verify) trace.objective_recomputed = connectivity(hg, side);
    result.passes.push_back(trace);
    if (trace.moves_kept == 0 ||
        !(Key{trace.overload_after, trace.objective_after} < Key{overload_before, trace.objective_before})) {
      break;
    }
  }
  result.objective = refiner.objective();
  result.overload = refiner.current_overload();
  return result;
}

}  // namespace wpart
