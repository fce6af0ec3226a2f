#include "wpart/recursive_bipartitioning.h"

#include <algorithm>
#include <chrono>
#include <future>

#include "wpart/prepack.h"

namespace wpart {

RbStats& RbStats::operator+=(const RbStats& o) {
  bipartitions += o.bipartitions;
  prepacking_triggers += o.prepacking_triggers;
  fixed_vertices += o.fixed_vertices;
  triggered_vertices += o.triggered_vertices;
  fallbacks += o.fallbacks;
  return *this;
}

double RbStats::fixed_fraction() const {
  return triggered_vertices == 0 ? 0.0
                                 : static_cast<double>(fixed_vertices) /
                                       static_cast<double>(triggered_vertices);
}

namespace {

struct Node {
  std::vector<VertexId> vertices;  // increasing ids of the top-level hypergraph
  std::vector<BlockId> certificate;  // per vertex: bin in [0, k')
  BlockId k_prime;
  BlockId offset;
  std::uint64_t seed;
  int depth;
};

struct NodeOutput {
  RbStats stats;
  std::vector<RbNodeTrace> trace;
};

struct Split {
  std::vector<BlockId> side;
  std::vector<BlockId> bin_in_side;
};

class Driver {
 public:
  Driver(const Hypergraph& hg, const BalanceContext& ctx, const RbConfig& config,
         std::vector<BlockId>& block_of)
      : hg_(hg), ctx_(ctx), config_(config), block_of_(block_of),
        cap_k_(ctx.bound().capacity()) {}

  NodeOutput run(Node node) {
    NodeOutput out;
    if (node.vertices.empty()) return out;
    if (node.k_prime == 1) {
      for (VertexId v : node.vertices) block_of_[v] = node.offset;
      return out;
    }
    const Hypergraph sub = subhypergraph(hg_, VertexSubset(node.vertices, hg_.num_vertices()));
    const auto weights = sub.vertex_weights();
    const auto bounds = bipartition_bounds(ctx_, sub.total_weight(), node.k_prime);
    const std::array<Weight, 2> capacity{bounds.capacity(0), bounds.capacity(1)};
    RbNodeTrace trace;
    trace.k_prime = node.k_prime;
    trace.num_vertices = node.vertices.size();

    std::optional<Split> split;
    ++out.stats.bipartitions;
    auto first = multilevel_bipartition(sub, capacity, {}, node.seed, config_.multilevel);
    if (first.balanced()) {
      auto check = check_deep_balance(ctx_, weights, first.side, bounds.k1, bounds.k2);
      if (check.deeply_balanced) split = Split{std::move(first.side), std::move(check.bin_in_side)};
    }
    trace.deep_balance_passed = split.has_value();

    if (!split) {
      trace.prepacking_computed = true;
      const auto prepacking = compute_prepacking(ctx_, weights, bounds);
      ++out.stats.prepacking_triggers;
      out.stats.fixed_vertices += prepacking.num_fixed;
      out.stats.triggered_vertices += node.vertices.size();
      ++out.stats.bipartitions;
      auto second = multilevel_bipartition(sub, capacity, prepacking.side_of,
                                           mix_seed(node.seed, 0x7265ULL), config_.multilevel);
      split = certify_restart(sub, bounds, prepacking, std::move(second));
    }

    if (!split) {
      trace.fallback = true;
      ++out.stats.fallbacks;
      Split folded;
      folded.side.resize(node.vertices.size());
      folded.bin_in_side.resize(node.vertices.size());
      for (std::size_t i = 0; i < node.vertices.size(); ++i) {
        const BlockId bin = node.certificate[i];
        folded.side[i] = bin < bounds.k1 ? 0 : 1;
        folded.bin_in_side[i] = bin < bounds.k1 ? bin : bin - bounds.k1;
      }
      split = std::move(folded);
    }
    out.trace.push_back(trace);

    std::array<Node, 2> child;
    for (int s = 0; s < 2; ++s) {
      child[s].k_prime = bounds.k_of(s);
      child[s].offset = node.offset + (s == 0 ? 0 : bounds.k1);
      child[s].seed = mix_seed(node.seed, static_cast<std::uint64_t>(s) + 1);
      child[s].depth = node.depth + 1;
    }
    for (std::size_t i = 0; i < node.vertices.size(); ++i) {
      auto& c = child[split->side[i]];
      c.vertices.push_back(node.vertices[i]);
      c.certificate.push_back(split->bin_in_side[i]);
    }
    node = Node{};

    NodeOutput left, right;
    if ((1 << child[0].depth) <= config_.threads && !child[0].vertices.empty() &&
        !child[1].vertices.empty()) {
      auto pending = std::async(std::launch::async, [&] { return run(std::move(child[0])); });
      right = run(std::move(child[1]));
      left = pending.get();
    } else {
      left = run(std::move(child[0]));
      right = run(std::move(child[1]));
    }
    out.stats += left.stats;
    out.stats += right.stats;
    out.trace.insert(out.trace.end(), left.trace.begin(), left.trace.end());
    out.trace.insert(out.trace.end(), right.trace.begin(), right.trace.end());
    return out;
  }

 private:
  // Accepts the restarted bipartition if LPT certifies both sides, or if the
  // prepacking satisfies the balance property and the bipartition respects the
  // bipartition bounds; in the latter case the children inherit the LPT
  // extension of the prepacking bins, which must fit L(k).
  std::optional<Split> certify_restart(const Hypergraph& sub, const BipartitionBounds& bounds,
                                       const Prepacking& prepacking, Bipartition second) const {
    const auto weights = sub.vertex_weights();
    if (second.balanced()) {
      auto check = check_deep_balance(ctx_, weights, second.side, bounds.k1, bounds.k2);
      if (check.deeply_balanced) return Split{std::move(second.side), std::move(check.bin_in_side)};
    }
    if (!second.balanced() && !prepacking.exhausted) return std::nullopt;

    Split split{std::move(second.side), std::vector<BlockId>(sub.num_vertices(), kInvalidBlock)};
    for (int s = 0; s < 2; ++s) {
      const BlockId first_bin = s == 0 ? 0 : bounds.k1;
      const BlockId k_s = bounds.k_of(s);
      std::vector<Weight> bins(prepacking.packing_loads.begin() + first_bin,
                               prepacking.packing_loads.begin() + first_bin + k_s);
      std::vector<VertexId> ordinary;
      for (VertexId v = 0; v < sub.num_vertices(); ++v) {
        if (split.side[v] != s) continue;
        if (prepacking.is_fixed(v)) {
          split.bin_in_side[v] = prepacking.packing_bin[v] - first_bin;
        } else {
          ordinary.push_back(v);
        }
      }
      std::stable_sort(ordinary.begin(), ordinary.end(), [&](VertexId a, VertexId b) {
        return weights[a] > weights[b];
      });
      std::vector<Weight> seq;
      seq.reserve(ordinary.size());
      for (VertexId v : ordinary) seq.push_back(weights[v]);
      const auto extension = lpt_extend(seq, k_s, std::move(bins));
      if (extension.makespan > cap_k_) return std::nullopt;
      for (std::size_t i = 0; i < ordinary.size(); ++i) split.bin_in_side[ordinary[i]] = extension.bin_of[i];
    }
    return split;
  }

  const Hypergraph& hg_;
  const BalanceContext& ctx_;
  const RbConfig& config_;
  std::vector<BlockId>& block_of_;
  Weight cap_k_;
};

}  // namespace

RbResult recursive_bipartition(const Hypergraph& hg, const BalanceContext& ctx, std::uint64_t seed,
                               const RbConfig& config) {
  if (ctx.k < 1) throw Error("k must be at least 1");
  if (hg.num_vertices() == 0) throw Error("recursive bipartitioning needs a nonempty hypergraph");
  RbResult result;
  result.block_of.assign(hg.num_vertices(), kInvalidBlock);
  const auto root_packing = lpt(hg.vertex_weights(), ctx.k);
  result.certified = ctx.bound().admits(root_packing.makespan);

  Node root;
  root.vertices.resize(hg.num_vertices());
  for (VertexId v = 0; v < hg.num_vertices(); ++v) root.vertices[v] = v;
  root.certificate = root_packing.bin_of;
  root.k_prime = ctx.k;
  root.offset = 0;
  root.seed = seed;
  root.depth = 0;
  Driver driver(hg, ctx, config, result.block_of);
  auto out = driver.run(std::move(root));
  result.stats = out.stats;
  result.trace = std::move(out.trace);
  return result;
}

RbResult recursive_bipartition(const Hypergraph& hg, BlockId k, double epsilon, std::uint64_t seed,
                               const RbConfig& config) {
  return recursive_bipartition(hg, BalanceContext::make(hg.vertex_weights(), k, epsilon), seed,
                               config);
}

PipelineResult partition_pipeline(const Hypergraph& hg, BlockId k, double epsilon,
                                  std::uint64_t seed, const RbConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (hg.num_vertices() == 0) throw Error("cannot partition an empty hypergraph");
  const auto pre = preprocess_remove_heavy(hg, k, epsilon);
  if (pre.k_prime < 1) throw Error("preprocessing left no blocks");

  PipelineResult result;
  auto& report = result.report;
  report.k = k;
  report.k_prime = pre.k_prime;
  report.epsilon = epsilon;
  report.epsilon_hat = epsilon;
  report.removed = pre.removed.size();
  report.l_k = standard_bound(hg.total_weight(), k, epsilon);
  report.l_max = report.l_k + static_cast<double>(hg.max_vertex_weight());
  result.block_of.assign(hg.num_vertices(), kInvalidBlock);

  Hypergraph reduced;
  std::vector<BlockId> reduced_blocks;
  report.certified = true;
  if (!pre.reduced.empty()) {
    reduced = subhypergraph(hg, pre.reduced);
    const auto ctx = BalanceContext::make(reduced.vertex_weights(), pre.k_prime, epsilon);
    report.epsilon_hat = ctx.epsilon_hat;
    report.l_lpt = ctx.l_lpt;
    BalanceContext rb_ctx = BalanceContext::make(reduced.vertex_weights(), pre.k_prime, ctx.epsilon_hat);
    auto rb = recursive_bipartition(reduced, rb_ctx, seed, config);
    report.stats = rb.stats;
    report.certified = rb.certified;
    reduced_blocks = std::move(rb.block_of);
    for (VertexId v = 0; v < reduced.num_vertices(); ++v) {
      result.block_of[pre.reduced.parent_id(v)] = reduced_blocks[v];
    }
  }
  for (std::size_t i = 0; i < pre.removed.size(); ++i) {
    result.block_of[pre.removed[i]] = pre.k_prime + static_cast<BlockId>(i);
  }

  report.block_weights = block_weights(hg, result.block_of, k);
  report.max_block_weight = *std::max_element(report.block_weights.begin(), report.block_weights.end());
  report.objective = connectivity(hg, result.block_of);
  report.objective_reduced = reduced_blocks.empty() ? 0 : connectivity(reduced, reduced_blocks);
  report.alpha = report.objective - report.objective_reduced;
  const Bound lpt_bound(report.l_lpt);
  report.balanced = true;
  for (BlockId b = 0; b < pre.k_prime; ++b) {
    if (!lpt_bound.admits(report.block_weights[b])) report.balanced = false;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace wpart
