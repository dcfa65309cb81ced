#include <doctest.h>

#include <cmath>
#include <random>

#include "burnlab/errors.hpp"
#include "burnlab/oracle.hpp"
#include "burnlab/solver.hpp"

using namespace burnlab;

namespace {

void check_certificate(const Host& host, const TargetSet& target, const SolveResult& r) {
  REQUIRE(r.certificate.length() == r.upper);
  const auto trace = simulate(host, r.certificate, target);
  REQUIRE(trace.target_burned_after_schedule);
  REQUIRE(trace.skipped_rounds.empty());
  REQUIRE(validate_cover(host, r.cover, target));
}

std::int64_t isqrt_ceil(std::int64_t n) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (s * s < n) ++s;
  while (s > 0 && (s - 1) * (s - 1) >= n) --s;
  return s;
}

}  // namespace

TEST_CASE("paths burn in ceil(sqrt(n)) rounds") {
  for (std::int64_t n = 1; n <= 100; ++n) {
    const Host host(GridSpec(1, n));
    const auto r = burning_number(host, TargetSet::all());
    REQUIRE(r.solved);
    REQUIRE(r.value == isqrt_ceil(n));
    check_certificate(host, TargetSet::all(), r);
  }
}

TEST_CASE("small grids") {
  CHECK(burning_number(Host(GridSpec(3, 3)), TargetSet::all()).value == 3);
  CHECK(burning_number(Host(GridSpec(5, 5)), TargetSet::all()).value == 4);
  CHECK(burning_number(Host(GridSpec(4, 8)), TargetSet::all()).value == 5);
  CHECK(burning_number(Host(GridSpec(3, 9)), TargetSet::all()).value == 4);
}

TEST_CASE("partial targets on fences") {
  CHECK(partial_burning_number(GridSpec(4, 16), {{1}, {4}}).value == 6);
  CHECK(partial_burning_number(GridSpec(4, 16), {{1}}).value == 4);
  CHECK(partial_burning_number(GridSpec(6, 8), {{1}, {5}}).value == 4);
  CHECK(partial_burning_number(GridSpec(3, 2), {{1}, {3}}).value == 3);
  CHECK(partial_burning_number(GridSpec(2, 2), {{1}, {2}}).value == 2);
}

TEST_CASE("full burning numbers for m <= 4, n <= 20 match the pinned table") {
  // computed independently with an integer program
  const std::vector<std::vector<int>> table = {
      {1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5},
      {2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5},
      {2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6},
      {2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6},
  };
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 20; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const Host host(GridSpec(m, n));
      const auto r = burning_number(host, TargetSet::all());
      REQUIRE(r.solved);
      REQUIRE(r.value == table[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(n - 1)]);
      check_certificate(host, TargetSet::all(), r);
    }
}

TEST_CASE("brute-force oracle basics") {
  CHECK(brute_force_oracle(Host(path_graph(4)), TargetSet::all(), 2));
  CHECK_FALSE(brute_force_oracle(Host(path_graph(5)), TargetSet::all(), 2));
  CHECK(brute_force_burning_number(Host(path_graph(10)), TargetSet::all()) == 4);
  CHECK_THROWS_AS(brute_force_oracle(Host(GridSpec(6, 6)), TargetSet::all(), 4), ResourceError);
  CHECK_NOTHROW(brute_force_oracle(Host(GridSpec(10, 10)), TargetSet::all(), 2));
}

TEST_CASE("solver agrees with brute force on random connected subgraphs") {
  std::mt19937_64 rng(3);
  int tested = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto m = std::uniform_int_distribution<std::int64_t>(2, 4)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(2, 6)(rng);
    const auto full = explicit_from_grid(GridSpec(m, n));
    std::vector<Edge> cut;
    std::bernoulli_distribution drop(0.2);
    for (const auto& e : full.edges())
      if (drop(rng)) cut.push_back(e);
    const auto g = remove_edges(full, cut);
    if (!is_connected(g)) continue;
    ++tested;
    const Host host(g);
    std::vector<VertexId> some;
    for (VertexId v = 0; v < g.vertex_count(); v += 2) some.push_back(v);
    for (const auto& target : {TargetSet::all(), TargetSet::vertices(some)}) {
      const auto r = burning_number(host, target);
      REQUIRE(r.solved);
      REQUIRE(r.value == brute_force_burning_number(host, target));
      check_certificate(host, target, r);
    }
  }
  CHECK(tested > 20);
}

TEST_CASE("solver agrees with brute force on grids up to 4x8") {
  OracleLimits limits;
  limits.max_vertices = 32;
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = m; n <= 8; ++n) {
      const Host host(GridSpec(m, n));
      CAPTURE(m);
      CAPTURE(n);
      CHECK(burning_number(host, TargetSet::all()).value == brute_force_burning_number(host, TargetSet::all(), limits));
      if (m >= 2) {
        const auto target = TargetSet::paths({{1}, {m}});
        CHECK(burning_number(host, target).value == brute_force_burning_number(host, target, limits));
      }
    }
}

TEST_CASE("larger targets never need fewer rounds") {
  const GridSpec g(6, 12);
  const auto one = partial_burning_number(g, {{1}}).value;
  const auto two = partial_burning_number(g, {{1}, {6}}).value;
  const auto three = partial_burning_number(g, {{1}, {3}, {6}}).value;
  const auto all = burning_number(Host(g), TargetSet::all()).value;
  CHECK(one <= two);
  CHECK(two <= three);
  CHECK(three <= all);
}

TEST_CASE("connected graphs burn within ceil(sqrt(|V|)) rounds") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const VertexId n = std::uniform_int_distribution<VertexId>(2, 22)(rng);
    // random tree plus a few chords
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<VertexId>(0, v - 1)(rng), v);
    const Host host(ExplicitGraph(n, edges));
    const auto r = burning_number(host, TargetSet::all());
    REQUIRE(r.solved);
    CHECK(r.value <= isqrt_ceil(n));
    check_certificate(host, TargetSet::all(), r);
  }
}

TEST_CASE("thread count does not change the answer") {
  for (auto [m, n] : {std::pair<std::int64_t, std::int64_t>{4, 8}, {5, 7}, {3, 12}}) {
    const Host host(GridSpec(m, n));
    std::vector<std::int64_t> values;
    for (int threads : {1, 4, 8}) {
      SolverConfig cfg;
      cfg.thread_count_hint = threads;
      const auto r = burning_number(host, TargetSet::all(), cfg);
      values.push_back(r.value);
      check_certificate(host, TargetSet::all(), r);
    }
    CHECK(values[0] == values[1]);
    CHECK(values[1] == values[2]);
  }
}

TEST_CASE("symmetry reduction does not change the answer") {
  for (std::int64_t m = 2; m <= 5; ++m)
    for (std::int64_t n = m; n <= 9; ++n) {
      SolverConfig plain;
      plain.symmetry_reduction = false;
      const Host host(GridSpec(m, n));
      CHECK(burning_number(host, TargetSet::all()).value == burning_number(host, TargetSet::all(), plain).value);
    }
}

TEST_CASE("an exhausted budget reports bounds instead of a value") {
  SolverConfig cfg;
  cfg.node_budget = 5;
  const Host host(GridSpec(4, 8));
  const auto r = burning_number(host, TargetSet::all(), cfg);
  CHECK_FALSE(r.solved);
  CHECK(r.lower <= 5);
  CHECK(r.upper >= 5);
  CHECK(r.value == r.lower);
  check_certificate(host, TargetSet::all(), r);
}

TEST_CASE("caps and invalid configuration") {
  SolverConfig cfg;
  cfg.vertex_cap = 10;
  CHECK_THROWS_AS(burning_number(Host(GridSpec(4, 4)), TargetSet::all(), cfg), ResourceError);
  SolverConfig bad;
  bad.max_horizon = 65;
  CHECK_THROWS_AS(burning_number(Host(GridSpec(2, 2)), TargetSet::all(), bad), InputError);
  bad = {};
  bad.node_budget = 0;
  CHECK_THROWS_AS(burning_number(Host(GridSpec(2, 2)), TargetSet::all(), bad), InputError);
  bad = {};
  bad.thread_count_hint = 0;
  CHECK_THROWS_AS(burning_number(Host(GridSpec(2, 2)), TargetSet::all(), bad), InputError);
  CHECK_THROWS_AS(partial_burning_number(GridSpec(3, 3), {{4}}), InputError);
}
