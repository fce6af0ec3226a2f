#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.h"
#include "wpart/lpt.h"

using namespace wpart;

TEST_CASE("lpt_extend examples") {
  const std::vector<Weight> unit{1, 1, 1, 1};
  CHECK(lpt_extend(unit, 2, {0, 0}).makespan == 2);

  const std::vector<Weight> w{3, 3, 2, 2, 2};
  const auto r = lpt_extend(w, 2, {0, 0});
  CHECK(r.makespan == 7);
  CHECK(r.loads == std::vector<Weight>{7, 5});
  CHECK(r.bin_of == std::vector<BlockId>{0, 1, 0, 1, 0});

  const std::vector<Weight> twos{2, 2};
  const auto pre = lpt_extend(twos, 2, {6, 0});
  CHECK(pre.makespan == 6);
  CHECK(pre.loads == std::vector<Weight>{6, 4});
}

TEST_CASE("lpt_extend errors") {
  const std::vector<Weight> unsorted{1, 2};
  CHECK_THROWS_AS(lpt_extend(unsorted, 2, {0, 0}), Error);
  CHECK_THROWS_AS(lpt_extend(unsorted, 0, {}), Error);
  CHECK_THROWS_AS(lpt_extend(std::vector<Weight>{2, 1}, 2, {0}), Error);
}

TEST_CASE("lpt sorts arbitrary input and reports original positions") {
  const std::vector<Weight> w{2, 3, 2, 3, 2};
  const auto r = lpt(w, 2);
  CHECK(r.makespan == 7);
  std::vector<Weight> loads(2, 0);
  for (std::size_t i = 0; i < w.size(); ++i) loads[r.bin_of[i]] += w[i];
  CHECK(loads == r.loads);
}

TEST_CASE("brute_force_most_balanced examples and guardrail") {
  CHECK(brute_force_most_balanced(std::vector<Weight>{3, 3, 2, 2, 2}, 2) == 6);
  CHECK(brute_force_most_balanced(std::vector<Weight>{4, 4, 4}, 2) == 8);
  CHECK(brute_force_most_balanced(std::vector<Weight>{9}, 1) == 9);
  CHECK_THROWS_AS(brute_force_most_balanced(std::vector<Weight>(15, 1), 2), Error);
  CHECK_THROWS_AS(brute_force_most_balanced(std::vector<Weight>(3, 1), 5), Error);
}

TEST_CASE("brute_force_most_balanced agrees with plain enumeration") {
  Rng rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 8));
    const int k = static_cast<int>(rng.uniform(1, 4));
    const auto w = oracle::random_weights(rng, n, 12);
    CHECK(brute_force_most_balanced(w, k) == oracle::most_balanced(w, k));
  }
}

TEST_CASE("lpt_extend matches a step-by-step greedy simulation") {
  Rng rng(5);
  for (int iter = 0; iter < 300; ++iter) {
    const BlockId k = static_cast<BlockId>(rng.uniform(1, 6));
    const auto w = oracle::sorted_desc(oracle::random_weights(rng, static_cast<std::size_t>(rng.uniform(0, 20)), 30));
    std::vector<Weight> bins(static_cast<std::size_t>(k));
    for (auto& b : bins) b = rng.uniform(0, 20);
    CHECK(lpt_extend(w, k, bins).loads == oracle::greedy_loads(w, bins));
  }
}

TEST_CASE("Graham bound and unweighted optimality") {
  Rng rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 10));
    const BlockId k = static_cast<BlockId>(rng.uniform(2, 4));
    const auto w = oracle::random_weights(rng, n, 20);
    const Weight lpt_ms = lpt_makespan(w, k);
    const Weight opt = brute_force_most_balanced(w, k);
    // LPT <= (4/3 - 1/(3k))·OPT  <=>  3k·LPT <= (4k - 1)·OPT
    CHECK(3 * k * lpt_ms <= (4 * k - 1) * opt);
  }
  for (std::size_t n = 1; n <= 40; ++n) {
    for (BlockId k = 1; k <= 6; ++k) {
      CHECK(lpt_makespan(std::vector<Weight>(n, 1), k) == ceil_div(static_cast<Weight>(n), k));
    }
  }
}

TEST_CASE("af_bound examples") {
  CHECK(af_bound(std::vector<Weight>{5, 3, 2}, 2) == Rational(6));
  CHECK(af_bound(std::vector<Weight>{7}, 3) == Rational(7));
  CHECK(af_bound(std::vector<Weight>{}, 2) == Rational(0));

  const std::vector<Weight> w{5, 3, 2};
  const std::vector<std::int64_t> d{2};
  const WeightIndex index(w, d);
  CHECK(index.af_bound(0, 3, 2) == Rational(6));
  CHECK(index.af_bound(1, 1, 2) == Rational(0));
  CHECK(index.af_bound(2, 3, 2) == Rational(2));
  CHECK_THROWS_AS(index.af_bound(2, 1, 2), Error);
}

TEST_CASE("range_max examples") {
  const std::vector<Weight> w{5, 3, 2};
  const std::vector<std::int64_t> d{2};
  const WeightIndex index(w, d);
  CHECK(index.h_value(2, 0) == Rational(5));
  CHECK(index.h_value(2, 1) == Rational(11, 2));
  CHECK(index.h_value(2, 2) == Rational(6));
  CHECK(index.range_max(2, 0, 2) == Rational(6));
  CHECK(index.range_max(2, 0, 1) == Rational(11, 2));
  CHECK(index.range_max(2, 1, 1) == Rational(11, 2));
  CHECK_THROWS_AS(index.range_max(2, 2, 3), Error);
  CHECK_THROWS_AS(index.range_max(3, 0, 1), Error);
}

TEST_CASE("smallest_t examples") {
  const std::vector<Weight> w{4, 4, 2, 2};
  const std::vector<std::int64_t> d{1};
  const WeightIndex index(w, d);
  CHECK(index.smallest_t(0, 12, 12) == std::optional<std::size_t>(0));
  CHECK(index.smallest_t(0, 0, 9) == std::optional<std::size_t>(3));
  CHECK(index.smallest_t(0, 0, 13) == std::nullopt);
  const std::vector<Weight> one{1};
  CHECK(WeightIndex(one, d).smallest_t(0, 0, 5) == std::nullopt);
}

TEST_CASE("weight index order is decreasing with ties by id") {
  const std::vector<Weight> w{2, 5, 2, 5, 1};
  const std::vector<std::int64_t> d{1};
  const WeightIndex index(w, d);
  CHECK(std::vector<VertexId>(index.order().begin(), index.order().end()) ==
        std::vector<VertexId>{1, 3, 0, 2, 4});
  for (std::size_t i = 0; i < index.size(); ++i) CHECK(index.weight_at(i) == w[index.order()[i]]);
}

TEST_CASE("data structures agree with naive scans") {
  Rng rng(17);
  for (int iter = 0; iter < 2000; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 60));
    const auto w = oracle::random_weights(rng, n, 50);
    const std::int64_t d = rng.uniform(1, 8);
    const std::vector<std::int64_t> ds{d};
    const WeightIndex index(w, ds);
    const auto sorted = oracle::sorted_desc(w);

    const auto i = static_cast<std::size_t>(rng.below(n));
    const auto j = i + static_cast<std::size_t>(rng.below(n - i));
    Rational naive(0, d);
    for (std::size_t p = i; p <= j; ++p) {
      Weight before = 0;
      for (std::size_t q = 0; q < p; ++q) before += sorted[q];
      naive = std::max(naive, Rational(d * sorted[p] + before, d));
    }
    CHECK(index.range_max(d, i, j) == naive);

    const std::vector<Weight> window(sorted.begin() + static_cast<std::ptrdiff_t>(i),
                                     sorted.begin() + static_cast<std::ptrdiff_t>(j + 1));
    CHECK(index.af_bound(i, j + 1, d) == oracle::af(window, d));

    const Weight base = rng.uniform(0, 100);
    const Weight threshold = rng.uniform(0, 1500);
    std::optional<std::size_t> linear;
    Weight acc = base;
    for (std::size_t t = 0; i + t <= n; ++t) {
      if (acc >= threshold) {
        linear = t;
        break;
      }
      if (i + t < n) acc += sorted[i + t];
    }
    CHECK(index.smallest_t(i, base, threshold) == linear);
  }
}

TEST_CASE("LPT extension of a prepacking stays within the AF bound") {
  Rng rng(19);
  for (int iter = 0; iter < 300; ++iter) {
    const BlockId k = static_cast<BlockId>(rng.uniform(1, 5));
    std::vector<Weight> bins(static_cast<std::size_t>(k));
    for (auto& b : bins) b = rng.uniform(0, 30);
    const auto rest = oracle::sorted_desc(oracle::random_weights(rng, static_cast<std::size_t>(rng.uniform(0, 15)), 20));
    const auto r = lpt_extend(rest, k, bins);
    const Weight fixed_total = std::accumulate(bins.begin(), bins.end(), Weight{0});
    const Rational lhs = Rational(fixed_total, k) + af_bound(rest, k);
    const Rational bound = std::max(lhs, Rational(*std::max_element(bins.begin(), bins.end())));
    CHECK(Rational(r.makespan) <= bound);
  }
}

TEST_CASE("decreasing order gives the tightest AF bound") {
  Rng rng(23);
  for (int iter = 0; iter < 60; ++iter) {
    auto w = oracle::sorted_desc(oracle::random_weights(rng, static_cast<std::size_t>(rng.uniform(1, 6)), 9));
    const std::int64_t d = rng.uniform(1, 4);
    const Rational sorted_af = af_bound(w, d);
    std::sort(w.begin(), w.end());
    do {
      CHECK(sorted_af <= oracle::af(w, d));
    } while (std::next_permutation(w.begin(), w.end()));
  }
}
