#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "burnlab/grid.hpp"

namespace burnlab {

using Edge = std::pair<VertexId, VertexId>;

/// Small simple undirected graph with adjacency lists.
///
/// Vertex ids are dense in [0, vertex_count()). Edges are stored normalized
/// (smaller id first) and sorted, so two graphs with the same edge set
/// compare equal.
class ExplicitGraph {
 public:
  ExplicitGraph() = default;
  /// Throws InputError on self-loops, duplicates or out-of-range ids.
  ExplicitGraph(VertexId vertex_count, std::vector<Edge> edges);

  VertexId vertex_count() const noexcept { return static_cast<VertexId>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const VertexId> neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(VertexId u, VertexId v) const;

  bool operator==(const ExplicitGraph& other) const { return edges_ == other.edges_ && adj_.size() == other.adj_.size(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
};

/// H together with the id each of its vertices had in the parent graph.
struct Subgraph {
  ExplicitGraph graph;
  std::vector<VertexId> to_parent;
};

inline constexpr VertexId kDefaultMaterializeCap = 10'000;

/// Materialize G_{m,n}; vertex ids follow GridSpec::id. Throws ResourceError
/// above `cap` vertices.
ExplicitGraph explicit_from_grid(const GridSpec& g, VertexId cap = kDefaultMaterializeCap);

/// Path P_n on ids 0..n-1.
ExplicitGraph path_graph(VertexId n);

ExplicitGraph remove_edges(const ExplicitGraph& g, std::span<const Edge> edges);
/// Deletes the vertices and their incident edges, renumbering survivors in order.
Subgraph remove_vertices(const ExplicitGraph& g, std::span<const VertexId> vertices);

inline constexpr std::int64_t kUnreachable = -1;

/// Single-source BFS distances; kUnreachable for other components.
std::vector<std::int64_t> bfs_distances(const ExplicitGraph& g, VertexId source);

bool is_connected(const ExplicitGraph& g);

/// Minimum eccentricity. Throws DisconnectedGraphError for disconnected graphs.
std::int64_t radius(const ExplicitGraph& g);

/// "p <count>" then one "e <u> <v>" line per edge, 0-indexed.
void write_edge_list(std::ostream& out, const ExplicitGraph& g);
/// Inverse of write_edge_list. Blank lines and lines starting with 'c' are skipped.
ExplicitGraph read_edge_list(std::istream& in);

}  // namespace burnlab
