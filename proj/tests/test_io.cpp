#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "oracles.h"
#include "wpart/bench.h"
#include "wpart/generator.h"
#include "wpart/hgr_io.h"
#include "wpart/performance_profile.h"

using namespace wpart;

namespace {

std::string error_of(std::string_view text) {
  try {
    parse_hgr(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_hgr examples") {
  const auto hg = parse_hgr("2 3 11\n1 1 2\n2 2 3\n4\n4\n4\n");
  CHECK(hg.num_vertices() == 3);
  CHECK(hg.num_nets() == 2);
  CHECK(hg.vertex_weight(0) == 4);
  CHECK(hg.total_weight() == 12);
  CHECK(hg.net_weight(0) == 1);
  CHECK(hg.net_weight(1) == 2);
  CHECK(std::vector<VertexId>(hg.pins(0).begin(), hg.pins(0).end()) == std::vector<VertexId>{0, 1});
  CHECK(std::vector<VertexId>(hg.pins(1).begin(), hg.pins(1).end()) == std::vector<VertexId>{1, 2});

  const auto plain = parse_hgr("% comment\n2 3\n1 2\n\n2 3\n");
  CHECK(plain.total_weight() == 3);
  CHECK(plain.net_weight(1) == 1);

  CHECK(parse_hgr("1 2 10\n1 2\n5\n7\n").vertex_weight(1) == 7);
  CHECK(parse_hgr("1 2 1\n3 1 2\n").net_weight(0) == 3);
}

TEST_CASE("parse_hgr errors carry line numbers") {
  CHECK(error_of("2 3\n1 2\n").find("line 3") != std::string::npos);
  CHECK(error_of("2 3\n1 2\n").find("expected 2 nets") != std::string::npos);
  CHECK(error_of("1 3\n1 4\n").find("line 2") != std::string::npos);
  CHECK(error_of("1 3\n1 4\n").find("out of range") != std::string::npos);
  CHECK(error_of("1 2 10\n1 2\n0\n1\n").find("line 3") != std::string::npos);
  CHECK(error_of("1 2 1\n-2 1 2\n").find("non-positive") != std::string::npos);
  CHECK(error_of("x y\n").find("line 1") != std::string::npos);
  CHECK(error_of("").find("missing header") != std::string::npos);
  CHECK(error_of("1 2 7\n1 2\n").find("fmt") != std::string::npos);
  CHECK(error_of("1 2\n1 2\n1 2\n").find("trailing") != std::string::npos);
  CHECK(error_of("1 3\n1 1\n").find("duplicate") != std::string::npos);
}

TEST_CASE("hgr canonical round trip") {
  Rng rng(5);
  for (int iter = 0; iter < 50; ++iter) {
    const auto n = static_cast<std::size_t>(rng.uniform(2, 60));
    std::vector<Weight> w(n, 1);
    if (rng.flip()) w = oracle::random_weights(rng, n, 9);
    auto hg = oracle::random_hypergraph(rng, w, static_cast<std::size_t>(rng.uniform(0, 80)), 6);
    if (rng.flip()) {
      std::vector<Weight> unit_nets(hg.num_nets(), 1);
      std::vector<std::vector<VertexId>> nets;
      for (NetId e = 0; e < hg.num_nets(); ++e) nets.emplace_back(hg.pins(e).begin(), hg.pins(e).end());
      hg = build_hypergraph(w, nets, unit_nets);
    }
    const auto text = format_hgr(hg);
    const auto parsed = parse_hgr(text);
    CHECK(parsed == hg);
    CHECK(format_hgr(parsed) == text);
  }
  CHECK(format_hgr(parse_hgr("2 3 11\n1 1 2\n2 2 3\n4\n4\n4\n")) == "2 3 11\n1 1 2\n2 2 3\n4\n4\n4\n");
  CHECK(format_hgr(parse_hgr("1 2 11\n1 1 2\n1\n1\n")) == "1 2\n1 2\n");
}

TEST_CASE("partition files") {
  const std::vector<BlockId> p{0, 1, 1};
  CHECK(format_partition(p) == "0\n1\n1\n");
  CHECK(parse_partition("0\n1\n1\n", 3) == p);
  CHECK_THROWS_AS(parse_partition("0\n1\n", 3), Error);
  CHECK_THROWS_AS(parse_partition("0\n-1\n1\n", 3), Error);

  const auto path = (std::filesystem::temp_directory_path() / "wpart_partition_test.txt").string();
  write_partition(p, path);
  CHECK(read_partition(path, 3) == p);
  CHECK_THROWS_AS(read_partition(path, 4), Error);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_partition(path, 3), IoError);
}

TEST_CASE("generate_artificial examples") {
  const auto base = generate_circuit(6120, 1);
  const auto a = generate_artificial(base, 3);
  CHECK(a.max_heavy_weight == 99);
  CHECK(a.heavy_probability == doctest::Approx(120.0 / 6120.0));
  CHECK_FALSE(a.clamped);
  CHECK(a.hypergraph.num_nets() == base.num_nets());
  CHECK(generate_artificial(base, 3).hypergraph == a.hypergraph);

  const auto small = generate_artificial(generate_circuit(180, 1), 1);
  CHECK(small.clamped);
  CHECK(small.max_heavy_weight == 1);
  CHECK_THROWS_AS(generate_artificial(generate_circuit(120, 1), 1), Error);
}

TEST_CASE("generator statistics match the expectations") {
  const auto base = generate_circuit(6120, 7);
  double heavy_count = 0.0;
  double ratio = 0.0;
  const int seeds = 50;
  for (int s = 0; s < seeds; ++s) {
    const auto a = generate_artificial(base, static_cast<std::uint64_t>(s));
    const double light_total = static_cast<double>(a.hypergraph.total_weight() - a.heavy_total);
    CHECK(light_total == static_cast<double>(6120 - a.heavy_count));
    heavy_count += static_cast<double>(a.heavy_count);
    ratio += static_cast<double>(a.heavy_total) / light_total;
  }
  heavy_count /= seeds;
  ratio /= seeds;
  CHECK(heavy_count == doctest::Approx(120.0).epsilon(15.0 / 120.0));
  CHECK(ratio == doctest::Approx(1.0).epsilon(0.15));
}

TEST_CASE("performance profile examples") {
  const auto curves = performance_profile({"A", "B"}, {{10, 20}, {10, 30}});
  CHECK(curves[0].at(1.0) == 1.0);
  CHECK(curves[1].at(1.0) == 0.5);
  CHECK(curves[1].at(1.49) == 0.5);
  CHECK(curves[1].at(1.5) == 1.0);
  CHECK(curves[1].at(0.5) == 0.0);

  const auto single = performance_profile({"A"}, {{3, 7, 0}});
  CHECK(single[0].at(1.0) == 1.0);

  const auto same = performance_profile({"A", "B"}, {{4, 5}, {4, 5}});
  CHECK(same[0].at(1.0) == 1.0);
  CHECK(same[1].at(1.0) == 1.0);

  // Zero minimum: only exact zeros qualify.
  const auto zero = performance_profile({"A", "B"}, {{0, 2}, {1, 2}});
  CHECK(zero[0].at(1e9) == 1.0);
  CHECK(zero[1].at(1e9) == 0.5);

  CHECK_THROWS_AS(performance_profile({}, {}), Error);
  CHECK_THROWS_AS(performance_profile({"A"}, {{-1.0}}), Error);
}

TEST_CASE("profile curves are monotone and reach one") {
  Rng rng(8);
  for (int iter = 0; iter < 50; ++iter) {
    const auto algs = static_cast<std::size_t>(rng.uniform(1, 4));
    const auto inst = static_cast<std::size_t>(rng.uniform(1, 30));
    std::vector<std::vector<double>> q(algs, std::vector<double>(inst));
    for (auto& row : q) {
      for (auto& x : row) x = static_cast<double>(rng.uniform(1, 50));
    }
    std::vector<std::string> names(algs, "x");
    for (const auto& c : performance_profile(names, q)) {
      for (std::size_t i = 1; i < c.tau.size(); ++i) {
        CHECK(c.tau[i] > c.tau[i - 1]);
        CHECK(c.fraction[i] >= c.fraction[i - 1]);
      }
      CHECK(c.fraction.back() == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("bench emits one row per cell") {
  std::vector<BenchInstance> instances;
  instances.push_back({"small", generate_artificial(generate_circuit(400, 1), 1).hypergraph});
  BenchConfig cfg;
  cfg.threads = 2;
  const auto rows = run_bench(instances, cfg);
  CHECK(rows.size() == 27);
  const auto csv = bench_csv(rows);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 28);
  CHECK(csv.rfind("schema_version,algorithm,instance,k,epsilon,seed,km1", 0) == 0);
  const auto summary = summarize_bench(rows);
  CHECK(summary.size() == 9);
  for (const auto& s : summary) CHECK(s.runs == 3);
  cfg.threads = 1;
  const auto serial = run_bench(instances, cfg);
  for (std::size_t i = 0; i < rows.size(); ++i) CHECK(serial[i].report.objective == rows[i].report.objective);
}
