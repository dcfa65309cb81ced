#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "burnlab/graph.hpp"
#include "burnlab/grid.hpp"

namespace burnlab {

/// The graph a process runs on: an implicit grid or an explicit graph.
/// Cheap to copy; the explicit graph is shared and immutable.
class Host {
 public:
  explicit Host(GridSpec grid) : repr_(grid) {}
  explicit Host(ExplicitGraph graph)
      : repr_(std::make_shared<const ExplicitGraph>(std::move(graph))) {}

  bool is_grid() const noexcept { return std::holds_alternative<GridSpec>(repr_); }
  const GridSpec& grid() const { return std::get<GridSpec>(repr_); }
  const ExplicitGraph& graph() const { return *std::get<std::shared_ptr<const ExplicitGraph>>(repr_); }

  VertexId vertex_count() const noexcept;
  bool contains(VertexId v) const noexcept { return v >= 0 && v < vertex_count(); }

  /// Calls f(w) for each neighbor w of v.
  template <class F>
  void for_each_neighbor(VertexId v, F&& f) const {
    if (const auto* g = std::get_if<GridSpec>(&repr_)) {
      grid_neighbors(*g, v, f);
    } else {
      for (VertexId w : graph().neighbors(v)) f(w);
    }
  }

  /// Distance between two vertices; kUnreachable across components.
  /// O(1) on grids, one BFS on explicit graphs.
  std::int64_t distance(VertexId u, VertexId v) const;

 private:
  template <class F>
  static void grid_neighbors(const GridSpec& g, VertexId v, F& f) {
    const std::int64_t n = g.cols();
    const std::int64_t row = v / n;
    const std::int64_t col = v % n;
    if (row > 0) f(v - n);
    if (col > 0) f(v - 1);
    if (col + 1 < n) f(v + 1);
    if (row + 1 < g.rows()) f(v + n);
  }

  std::variant<GridSpec, std::shared_ptr<const ExplicitGraph>> repr_;
};

/// Vertices that must burn: everything, a union of horizontal paths (grids
/// only), or an explicit vertex list.
class TargetSet {
 public:
  static TargetSet all() { return TargetSet(Kind::All, {}, {}); }
  static TargetSet paths(std::vector<HorizontalPathSpec> paths);
  static TargetSet vertices(std::vector<VertexId> ids);

  bool is_all() const noexcept { return kind_ == Kind::All; }
  bool is_paths() const noexcept { return kind_ == Kind::Paths; }
  const std::vector<HorizontalPathSpec>& path_specs() const noexcept { return paths_; }
  const std::vector<VertexId>& vertex_ids() const noexcept { return ids_; }

  /// Throws InputError when the target does not fit the host.
  void validate(const Host& host) const;
  /// Membership mask over host vertex ids.
  std::vector<char> mask(const Host& host) const;
  /// Sorted, deduplicated member ids.
  std::vector<VertexId> members(const Host& host) const;

 private:
  enum class Kind { All, Paths, Vertices };
  TargetSet(Kind kind, std::vector<HorizontalPathSpec> paths, std::vector<VertexId> ids)
      : kind_(kind), paths_(std::move(paths)), ids_(std::move(ids)) {}

  Kind kind_;
  std::vector<HorizontalPathSpec> paths_;
  std::vector<VertexId> ids_;
};

}  // namespace burnlab
