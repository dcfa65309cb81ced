#include "burnlab/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {

ExplicitGraph::ExplicitGraph(VertexId vertex_count, std::vector<Edge> edges)
    : adj_(static_cast<std::size_t>(vertex_count)) {
  if (vertex_count < 0) throw InputError("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    throw InputError("duplicate edge " + std::to_string(dup->first) + "-" +
                     std::to_string(dup->second));
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

bool ExplicitGraph::has_edge(VertexId u, VertexId v) const {
  if (u < 0 || u >= vertex_count()) return false;
  const auto& list = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

ExplicitGraph explicit_from_grid(const GridSpec& g, VertexId cap) {
  if (g.vertex_count() > cap)
    throw ResourceError("grid has " + std::to_string(g.vertex_count()) +
                        " vertices, materialization cap is " + std::to_string(cap));
  std::vector<Edge> edges;
  for (std::int64_t r = 1; r <= g.rows(); ++r) {
    for (std::int64_t c = 1; c <= g.cols(); ++c) {
      const VertexId here = g.id({r, c});
      if (c < g.cols()) edges.emplace_back(here, g.id({r, c + 1}));
      if (r < g.rows()) edges.emplace_back(here, g.id({r + 1, c}));
    }
  }
  return ExplicitGraph(g.vertex_count(), std::move(edges));
}

ExplicitGraph path_graph(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return ExplicitGraph(n, std::move(edges));
}

ExplicitGraph remove_edges(const ExplicitGraph& g, std::span<const Edge> edges) {
  std::vector<Edge> doomed(edges.begin(), edges.end());
  for (auto& [u, v] : doomed)
    if (u > v) std::swap(u, v);
  std::sort(doomed.begin(), doomed.end());
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (!std::binary_search(doomed.begin(), doomed.end(), e)) kept.push_back(e);
  return ExplicitGraph(g.vertex_count(), std::move(kept));
}

Subgraph remove_vertices(const ExplicitGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> new_id(static_cast<std::size_t>(g.vertex_count()), 0);
  for (VertexId v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("vertex id out of range");
    new_id[static_cast<std::size_t>(v)] = kUnreachable;
  }
  Subgraph out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto& slot = new_id[static_cast<std::size_t>(v)];
    if (slot == kUnreachable) continue;
    slot = static_cast<VertexId>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges()) {
    const VertexId a = new_id[static_cast<std::size_t>(u)];
    const VertexId b = new_id[static_cast<std::size_t>(v)];
    if (a != kUnreachable && b != kUnreachable) kept.emplace_back(a, b);
  }
  out.graph = ExplicitGraph(static_cast<VertexId>(out.to_parent.size()), std::move(kept));
  return out;
}

std::vector<std::int64_t> bfs_distances(const ExplicitGraph& g, VertexId source) {
  std::vector<std::int64_t> dist(static_cast<std::size_t>(g.vertex_count()), kUnreachable);
  std::queue<VertexId> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const VertexId u = queue.front();
    queue.pop();
    for (VertexId w : g.neighbors(u)) {
      auto& d = dist[static_cast<std::size_t>(w)];
      if (d == kUnreachable) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const ExplicitGraph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; });
}

std::int64_t radius(const ExplicitGraph& g) {
  if (g.vertex_count() == 0) throw InputError("radius of the empty graph");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto dist = bfs_distances(g, v);
    if (std::any_of(dist.begin(), dist.end(), [](auto d) { return d == kUnreachable; }))
      throw DisconnectedGraphError("radius is infinite: graph is disconnected");
    best = std::min(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

void write_edge_list(std::ostream& out, const ExplicitGraph& g) {
  out << "p " << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u << ' ' << v << '\n';
}

ExplicitGraph read_edge_list(std::istream& in) {
  std::string line;
  std::int64_t line_no = 0;
  VertexId count = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == 'c') continue;
    const auto fail = [&](const std::string& why) {
      throw InputError("edge list line " + std::to_string(line_no) + ": " + why);
    };
    if (tag == "p") {
      if (count >= 0) fail("duplicate header");
      if (!(fields >> count) || count < 0) fail("bad vertex count");
    } else if (tag == "e") {
      if (count < 0) fail("edge before header");
      VertexId u = 0, v = 0;
      if (!(fields >> u >> v)) fail("expected two endpoints");
      edges.emplace_back(u, v);
    } else {
      fail("unknown record '" + tag + "'");
    }
  }
  if (count < 0) throw InputError("edge list has no 'p' header");
  return ExplicitGraph(count, std::move(edges));
}

}  // namespace burnlab
