#include <doctest.h>

#include <fstream>
#include <random>

#include "burnlab/burn_sim.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/serialize.hpp"

using namespace burnlab;

namespace {

/// All-pairs BFS; independent of the simulator.
std::vector<std::vector<std::int64_t>> all_distances(const Host& host) {
  std::vector<std::vector<std::int64_t>> d;
  for (VertexId s = 0; s < host.vertex_count(); ++s) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(host.vertex_count()), -1);
    std::vector<VertexId> queue{s};
    row[static_cast<std::size_t>(s)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      host.for_each_neighbor(queue[h], [&](VertexId w) {
        if (row[static_cast<std::size_t>(w)] < 0) {
          row[static_cast<std::size_t>(w)] = row[static_cast<std::size_t>(queue[h])] + 1;
          queue.push_back(w);
        }
      });
    d.push_back(std::move(row));
  }
  return d;
}

/// |burned after round t| = |{v : some x_i with i <= t has d(x_i, v) <= t - i}|.
std::int64_t closed_form_count(const std::vector<std::vector<std::int64_t>>& d, const BurningSchedule& s,
                               std::int64_t t) {
  std::int64_t count = 0;
  for (std::size_t v = 0; v < d.size(); ++v) {
    bool hit = false;
    for (std::int64_t i = 1; i <= std::min<std::int64_t>(t, s.length()) && !hit; ++i) {
      const auto& x = s.sources[static_cast<std::size_t>(i - 1)];
      if (!x) continue;
      const auto dist = d[static_cast<std::size_t>(*x)][v];
      hit = dist >= 0 && dist <= t - i;
    }
    count += hit;
  }
  return count;
}

ExplicitGraph random_graph(std::mt19937_64& rng, VertexId n, double p) {
  std::vector<Edge> edges;
  std::bernoulli_distribution keep(p);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (keep(rng)) edges.emplace_back(u, v);
  return ExplicitGraph(n, edges);
}

BurningSchedule load_fixture(const Host& host) {
  std::ifstream in(std::string(BURNLAB_FIXTURES) + "/fence_4x16.json");
  REQUIRE(in);
  return schedule_from_json(host, Json::parse(in));
}

}  // namespace

TEST_CASE("the shipped schedule burns the 4x16 fence in six rounds") {
  const Host host(GridSpec(4, 16));
  const auto schedule = load_fixture(host);
  REQUIRE(schedule.length() == 6);
  const auto trace = simulate(host, schedule, TargetSet::all());
  CHECK(trace.target_burned_round == 6);
  CHECK(trace.all_burned_round == 6);
  CHECK(trace.target_burned_after_schedule);
  CHECK(trace.skipped_rounds.empty());
  CHECK(trace.burned_counts.back() == 64);
  const auto d = all_distances(host);
  for (std::int64_t t = 1; t <= 6; ++t) CHECK(trace.burned_counts[static_cast<std::size_t>(t - 1)] == closed_form_count(d, schedule, t));
}

TEST_CASE("burned counts match the closed form on random graphs and schedules") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const VertexId n = std::uniform_int_distribution<VertexId>(1, 18)(rng);
    const Host host(random_graph(rng, n, 0.2));
    const auto d = all_distances(host);
    BurningSchedule s;
    const auto k = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < k; ++i) s.sources.emplace_back(std::uniform_int_distribution<VertexId>(0, n - 1)(rng));
    SimulateOptions opts;
    opts.mode = SimulationMode::Lenient;
    opts.max_rounds = 12;
    const auto trace = simulate(host, s, TargetSet::all(), opts);
    for (std::int64_t t = 1; t <= trace.rounds_run(); ++t)
      REQUIRE(trace.burned_counts[static_cast<std::size_t>(t - 1)] == closed_form_count(d, s, t));
  }
}

TEST_CASE("strict mode rejects a source lit on a burned vertex") {
  const Host host(GridSpec(1, 5));
  const auto s = BurningSchedule::from_vertices({0, 0});
  try {
    simulate(host, s, TargetSet::all());
    FAIL("expected InvalidScheduleError");
  } catch (const InvalidScheduleError& e) {
    CHECK(e.round() == 2);
  }
  SimulateOptions lenient;
  lenient.mode = SimulationMode::Lenient;
  const auto trace = simulate(host, s, TargetSet::all(), lenient);
  CHECK(trace.skipped_rounds == std::vector<std::int64_t>{2});
  CHECK(trace.target_burned_round == 5);
}

TEST_CASE("a source reached by spread in its own round is legal") {
  // x_2 = vertex 1 is set alight by x_1's spread during round 2
  const Host host(GridSpec(1, 4));
  const auto trace = simulate(host, BurningSchedule::from_vertices({0, 1, 3}), TargetSet::all());
  CHECK(trace.target_burned_round == 3);
}

TEST_CASE("empty slots are legal only once everything is burned") {
  BurningSchedule done;
  done.sources = {VertexId{0}, std::nullopt};
  CHECK(simulate(Host(GridSpec(1, 1)), done, TargetSet::all()).target_burned_round == 1);

  BurningSchedule early;
  early.sources = {VertexId{1}, std::nullopt};
  CHECK_THROWS_AS(simulate(Host(GridSpec(1, 3)), early, TargetSet::all()), InvalidScheduleError);
}

TEST_CASE("the fire keeps spreading after the last source") {
  const Host host(GridSpec(1, 5));
  const auto trace = simulate(host, BurningSchedule::from_vertices({0}), TargetSet::all());
  CHECK(trace.schedule_length == 1);
  CHECK_FALSE(trace.target_burned_after_schedule);
  CHECK(trace.target_burned_round == 5);
  CHECK(trace.rounds_run() == 5);

  SimulateOptions capped;
  capped.max_rounds = 3;
  const auto short_trace = simulate(host, BurningSchedule::from_vertices({0}), TargetSet::all(), capped);
  CHECK(short_trace.rounds_run() == 3);
  CHECK_FALSE(short_trace.target_burned_round.has_value());
}

TEST_CASE("partial targets finish before the whole host") {
  const Host host(GridSpec(3, 3));
  const auto s = BurningSchedule::from_grid(host.grid(), {{1, 2}, {1, 3}});
  const auto trace = simulate(host, s, TargetSet::paths({{1}}));
  CHECK(trace.target_burned_round == 2);
  CHECK_FALSE(trace.all_burned_round.has_value());
}

TEST_CASE("burn rounds are recorded on request") {
  SimulateOptions opts;
  opts.record_burn_rounds = true;
  const auto trace = simulate(Host(GridSpec(1, 3)), BurningSchedule::from_vertices({1}), TargetSet::all(), opts);
  CHECK(trace.burn_rounds == std::vector<std::int32_t>{2, 1, 2});
}

TEST_CASE("schedules reject vertices outside the host") {
  CHECK_THROWS_AS(simulate(Host(GridSpec(2, 2)), BurningSchedule::from_vertices({4}), TargetSet::all()), InputError);
  CHECK_THROWS_AS(BurningSchedule::from_grid(GridSpec(2, 2), {{3, 1}}), InputError);
}

TEST_CASE("grid cover validation agrees with brute force") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const auto m = std::uniform_int_distribution<std::int64_t>(1, 6)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(1, 7)(rng);
    const Host host(GridSpec(m, n));
    const auto& g = host.grid();
    CoverCertificate cover;
    const auto k = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < k; ++i) cover.centers.push_back(std::uniform_int_distribution<VertexId>(0, m * n - 1)(rng));

    std::vector<TargetSet> targets{TargetSet::all(), TargetSet::paths({{1}, {m}}),
                                   TargetSet::vertices({0, m * n - 1})};
    for (const auto& target : targets) {
      bool covered = true;
      for (auto v : target.members(host)) {
        bool hit = false;
        for (std::size_t i = 0; i < cover.centers.size(); ++i)
          hit = hit || grid_distance(g, g.vertex(cover.centers[i]), g.vertex(v)) <= cover.radius_of(i);
        covered = covered && hit;
      }
      REQUIRE(validate_cover(host, cover, target) == covered);
      if (!target.is_paths())
        REQUIRE(validate_cover(Host(explicit_from_grid(g)), cover, target) == covered);
    }
  }
}

TEST_CASE("repair turns any cover into a strict schedule of the same length") {
  std::mt19937_64 rng(5);
  int exercised = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto m = std::uniform_int_distribution<std::int64_t>(1, 5)(rng);
    const auto n = std::uniform_int_distribution<std::int64_t>(1, 6)(rng);
    const Host host(GridSpec(m, n));
    CoverCertificate cover;
    const auto k = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < k; ++i) cover.centers.push_back(std::uniform_int_distribution<VertexId>(0, m * n - 1)(rng));
    if (!validate_cover(host, cover, TargetSet::all())) continue;
    ++exercised;
    const auto s = repair_cover_to_schedule(host, cover);
    REQUIRE(s.length() == cover.horizon());
    const auto trace = simulate(host, s, TargetSet::all());
    REQUIRE(trace.target_burned_after_schedule);
  }
  CHECK(exercised > 30);
}

TEST_CASE("repair keeps centers that are still unburned") {
  const Host host(GridSpec(1, 7));
  const CoverCertificate cover{{1, 4, 6}};
  const auto s = repair_cover_to_schedule(host, cover);
  CHECK(s == BurningSchedule::from_vertices({1, 4, 6}));
  // a repeated center gets moved
  const auto moved = repair_cover_to_schedule(host, CoverCertificate{{3, 3, 0}});
  CHECK(moved.sources[0] == 3);
  CHECK(moved.sources[1] != 3);
  CHECK(simulate(host, moved, TargetSet::all()).skipped_rounds.empty());
}

TEST_CASE("schedule JSON round-trips on grids and explicit hosts") {
  const Host grid(GridSpec(4, 16));
  const auto s = load_fixture(grid);
  CHECK(schedule_from_json(grid, schedule_to_json(grid, s)) == s);
  const auto j = schedule_to_json(grid, s);
  CHECK(j["sources"][0] == Json::array({3, 8}));

  const Host graph(explicit_from_grid(GridSpec(2, 2)));
  BurningSchedule with_gap;
  with_gap.sources = {VertexId{0}, std::nullopt};
  CHECK(schedule_from_json(graph, schedule_to_json(graph, with_gap)) == with_gap);
  CHECK_THROWS_AS(schedule_from_json(graph, Json::parse(R"({"sources":[[1,1]]})")), InputError);
  CHECK_THROWS_AS(schedule_from_json(grid, Json::parse(R"({"sources":[[5,1]]})")), InputError);
  CHECK_THROWS_AS(schedule_from_json(grid, Json::parse(R"({"sources":"x"})")), InputError);
}
