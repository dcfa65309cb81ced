#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace burnlab {

using VertexId = std::int64_t;

/// A vertex of G_{m,n}; row is the height in [1, m], col is in [1, n].
struct Vertex {
  std::int64_t row = 1;
  std::int64_t col = 1;

  auto operator<=>(const Vertex&) const = default;
};

/// Implicit m x n Cartesian grid P_m □ P_n. Nothing is materialized.
class GridSpec {
 public:
  GridSpec(std::int64_t m, std::int64_t n);

  std::int64_t rows() const noexcept { return m_; }
  std::int64_t cols() const noexcept { return n_; }
  std::int64_t vertex_count() const noexcept { return m_ * n_; }

  /// Fence parameter c = m / sqrt(n), for reporting only.
  double fence_parameter() const noexcept;

  bool contains(const Vertex& v) const noexcept {
    return v.row >= 1 && v.row <= m_ && v.col >= 1 && v.col <= n_;
  }
  /// Throws InputError when v lies outside the grid.
  void require(const Vertex& v) const;

  /// Row-major id in [0, m*n).
  VertexId id(const Vertex& v) const noexcept { return (v.row - 1) * n_ + (v.col - 1); }
  Vertex vertex(VertexId id) const noexcept { return {id / n_ + 1, id % n_ + 1}; }

  bool operator==(const GridSpec&) const = default;

 private:
  std::int64_t m_;
  std::int64_t n_;
};

/// All n vertices of row `height`.
struct HorizontalPathSpec {
  std::int64_t height = 1;

  auto operator<=>(const HorizontalPathSpec&) const = default;
};

/// Closed column interval [lo, hi]; empty when lo > hi.
struct ColumnInterval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  bool empty() const noexcept { return lo > hi; }
  std::int64_t length() const noexcept { return empty() ? 0 : hi - lo + 1; }
  bool operator==(const ColumnInterval&) const = default;
};

/// Manhattan distance; throws InputError on out-of-range vertices.
std::int64_t grid_distance(const GridSpec& g, const Vertex& u, const Vertex& v);

/// Implicit ball B(center, radius) clipped to the grid.
class GridBall {
 public:
  GridBall(const GridSpec& g, Vertex center, std::int64_t radius);

  const Vertex& center() const noexcept { return center_; }
  std::int64_t radius() const noexcept { return radius_; }

  bool contains(const Vertex& w) const noexcept;
  /// Columns of the ball on row `row` (empty if the row is out of reach).
  ColumnInterval row_slice(std::int64_t row) const noexcept;
  /// |B(center, radius)|, computed row by row in O(min(m, 2r+1)).
  std::int64_t size() const noexcept;
  /// Explicit member list, row-major order. Intended for small balls.
  std::vector<Vertex> enumerate() const;

 private:
  GridSpec grid_;
  Vertex center_;
  std::int64_t radius_;
};

GridBall ball(const GridSpec& g, const Vertex& v, std::int64_t r);

/// |B(v, r) ∩ P| for the horizontal path P, in O(1).
std::int64_t ball_path_intersection_size(const GridSpec& g, const Vertex& v, std::int64_t r,
                                         const HorizontalPathSpec& p);

/// ceil((m-1)/2) + ceil((n-1)/2).
std::int64_t grid_radius(const GridSpec& g) noexcept;

}  // namespace burnlab
