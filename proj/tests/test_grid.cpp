#include <doctest.h>

#include <sstream>

#include "burnlab/errors.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/grid.hpp"
#include "burnlab/host.hpp"

using namespace burnlab;

TEST_CASE("grid dimensions must be positive") {
  CHECK_THROWS_AS(GridSpec(0, 3), InputError);
  CHECK_THROWS_AS(GridSpec(3, -1), InputError);
  const GridSpec g(1, 1);
  CHECK(g.vertex_count() == 1);
}

TEST_CASE("ids are row-major and round-trip") {
  const GridSpec g(3, 5);
  CHECK(g.id({1, 1}) == 0);
  CHECK(g.id({2, 1}) == 5);
  CHECK(g.id({3, 5}) == 14);
  for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(g.id(g.vertex(v)) == v);
  CHECK_THROWS_AS(g.require({4, 1}), InputError);
  CHECK_THROWS_AS(grid_distance(g, {1, 1}, {1, 6}), InputError);
}

TEST_CASE("Manhattan distance agrees with BFS on the materialized grid") {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = 1; n <= 6; ++n) {
      const GridSpec g(m, n);
      const auto e = explicit_from_grid(g);
      for (VertexId s = 0; s < g.vertex_count(); ++s) {
        const auto d = bfs_distances(e, s);
        for (VertexId v = 0; v < g.vertex_count(); ++v) REQUIRE(grid_distance(g, g.vertex(s), g.vertex(v)) == d[v]);
      }
    }
  const GridSpec big(30, 30);
  const auto e = explicit_from_grid(big);
  for (VertexId s : {VertexId{0}, VertexId{29}, VertexId{435}, VertexId{899}}) {
    const auto d = bfs_distances(e, s);
    for (VertexId v = 0; v < big.vertex_count(); ++v) REQUIRE(grid_distance(big, big.vertex(s), big.vertex(v)) == d[v]);
  }
}

TEST_CASE("ball size, slices and membership match enumeration") {
  for (std::int64_t m = 1; m <= 6; ++m)
    for (std::int64_t n = 1; n <= 7; ++n) {
      const GridSpec g(m, n);
      for (VertexId c = 0; c < g.vertex_count(); ++c)
        for (std::int64_t r = 0; r <= m + n; ++r) {
          const auto b = ball(g, g.vertex(c), r);
          std::int64_t count = 0;
          for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const bool inside = grid_distance(g, g.vertex(c), g.vertex(v)) <= r;
            count += inside;
            REQUIRE(b.contains(g.vertex(v)) == inside);
          }
          REQUIRE(b.size() == count);
          REQUIRE(static_cast<std::int64_t>(b.enumerate().size()) == count);
          if (r > 0) REQUIRE(ball(g, g.vertex(c), r - 1).size() <= count);
          for (std::int64_t row = 1; row <= m; ++row) {
            const auto slice = b.row_slice(row);
            std::int64_t on_row = 0;
            for (std::int64_t col = 1; col <= n; ++col) on_row += b.contains({row, col});
            REQUIRE(slice.length() == on_row);
            REQUIRE(ball_path_intersection_size(g, g.vertex(c), r, {row}) == on_row);
          }
        }
    }
  CHECK_THROWS_AS(ball(GridSpec(2, 2), {1, 1}, -1), InputError);
}

TEST_CASE("a ball that spans the grid covers it") {
  const GridSpec g(4, 16);
  CHECK(ball(g, {1, 1}, 18).size() == 64);
  CHECK(ball(g, {2, 8}, 0).size() == 1);
  // interior vertex, radius 1
  CHECK(ball(g, {2, 8}, 1).size() == 5);
}

TEST_CASE("grid radius equals the radius of the materialized grid") {
  for (std::int64_t m = 1; m <= 8; ++m)
    for (std::int64_t n = 1; n <= 8; ++n) CHECK(grid_radius(GridSpec(m, n)) == radius(explicit_from_grid(GridSpec(m, n))));
}

TEST_CASE("explicit graphs reject malformed edge sets") {
  CHECK_THROWS_AS(ExplicitGraph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(ExplicitGraph(3, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(ExplicitGraph(3, {{0, 3}}), InputError);
  const ExplicitGraph g(4, {{2, 1}, {0, 1}});
  CHECK(g.edge_count() == 2);
  CHECK(g.edges().front() == Edge{0, 1});
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.neighbors(1).size() == 2);
}

TEST_CASE("edge lists round-trip and report bad lines") {
  const auto g = explicit_from_grid(GridSpec(3, 4));
  std::stringstream buf;
  write_edge_list(buf, g);
  CHECK(read_edge_list(buf) == g);

  std::stringstream commented("c a triangle\np 3\ne 0 1\n\ne 1 2\ne 0 2\n");
  CHECK(read_edge_list(commented).edge_count() == 3);

  std::stringstream bad("p 3\ne 0 1\ne 1 x\n");
  try {
    read_edge_list(bad);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  std::stringstream headless("e 0 1\n");
  CHECK_THROWS_AS(read_edge_list(headless), InputError);
}

TEST_CASE("materializing refuses huge grids") {
  CHECK_THROWS_AS(explicit_from_grid(GridSpec(1000, 1000)), ResourceError);
  CHECK(explicit_from_grid(GridSpec(2, 3)).edge_count() == 7);
}

TEST_CASE("vertex removal renumbers survivors in order") {
  const auto p = path_graph(5);
  CHECK(p.edge_count() == 4);
  const std::vector<VertexId> gone{2};
  const auto sub = remove_vertices(p, gone);
  CHECK(sub.graph.vertex_count() == 4);
  CHECK(sub.to_parent == std::vector<VertexId>{0, 1, 3, 4});
  CHECK(sub.graph.edge_count() == 2);
  CHECK(sub.graph.has_edge(2, 3));
  CHECK_FALSE(is_connected(sub.graph));
  CHECK_THROWS_AS(radius(sub.graph), DisconnectedGraphError);

  const std::vector<Edge> cut{{1, 2}};
  const auto split = remove_edges(p, cut);
  CHECK(split.edge_count() == 3);
  CHECK(bfs_distances(split, 0)[4] == kUnreachable);
}

TEST_CASE("hosts share one interface over grids and explicit graphs") {
  const Host grid(GridSpec(3, 3));
  const Host graph(explicit_from_grid(GridSpec(3, 3)));
  for (VertexId u = 0; u < 9; ++u)
    for (VertexId v = 0; v < 9; ++v) CHECK(grid.distance(u, v) == graph.distance(u, v));
  std::vector<VertexId> a, b;
  grid.for_each_neighbor(4, [&](VertexId w) { a.push_back(w); });
  graph.for_each_neighbor(4, [&](VertexId w) { b.push_back(w); });
  std::sort(a.begin(), a.end());
  CHECK(a == b);
  CHECK_THROWS_AS(grid.distance(0, 9), InputError);
}

TEST_CASE("target sets validate against their host") {
  const Host grid(GridSpec(4, 5));
  CHECK_THROWS_AS(TargetSet::paths({}), InputError);
  CHECK_THROWS_AS(TargetSet::vertices({}), InputError);
  CHECK_THROWS_AS(TargetSet::paths({{5}}).validate(grid), InputError);
  CHECK_THROWS_AS(TargetSet::paths({{1}}).validate(Host(path_graph(3))), InputError);
  CHECK_THROWS_AS(TargetSet::vertices({20}).validate(grid), InputError);

  const auto rows = TargetSet::paths({{4}, {1}, {4}});
  CHECK(rows.path_specs().size() == 2);
  const auto members = rows.members(grid);
  CHECK(members.size() == 10);
  CHECK(members.front() == 0);
  CHECK(members.back() == 19);
  CHECK(TargetSet::all().members(grid).size() == 20);
  CHECK(TargetSet::vertices({3, 3, 1}).members(grid) == std::vector<VertexId>{1, 3});
}
