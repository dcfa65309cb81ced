#include "burnlab/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {

GridSpec::GridSpec(std::int64_t m, std::int64_t n) : m_(m), n_(n) {
  if (m < 1 || n < 1)
    throw InputError("grid dimensions must be positive, got " + std::to_string(m) + "x" +
                     std::to_string(n));
}

double GridSpec::fence_parameter() const noexcept {
  return static_cast<double>(m_) / std::sqrt(static_cast<double>(n_));
}

void GridSpec::require(const Vertex& v) const {
  if (!contains(v))
    throw InputError("vertex (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                     ") outside " + std::to_string(m_) + "x" + std::to_string(n_) + " grid");
}

std::int64_t grid_distance(const GridSpec& g, const Vertex& u, const Vertex& v) {
  g.require(u);
  g.require(v);
  return std::abs(u.row - v.row) + std::abs(u.col - v.col);
}

GridBall::GridBall(const GridSpec& g, Vertex center, std::int64_t radius)
    : grid_(g), center_(center), radius_(radius) {
  g.require(center);
  if (radius < 0) throw InputError("ball radius must be nonnegative");
}

bool GridBall::contains(const Vertex& w) const noexcept {
  return grid_.contains(w) &&
         std::abs(w.row - center_.row) + std::abs(w.col - center_.col) <= radius_;
}

ColumnInterval GridBall::row_slice(std::int64_t row) const noexcept {
  if (row < 1 || row > grid_.rows()) return {};
  const std::int64_t reach = radius_ - std::abs(row - center_.row);
  if (reach < 0) return {};
  return {std::max<std::int64_t>(1, center_.col - reach),
          std::min(grid_.cols(), center_.col + reach)};
}

std::int64_t GridBall::size() const noexcept {
  const std::int64_t lo = std::max<std::int64_t>(1, center_.row - radius_);
  const std::int64_t hi = std::min(grid_.rows(), center_.row + radius_);
  std::int64_t total = 0;
  for (std::int64_t r = lo; r <= hi; ++r) total += row_slice(r).length();
  return total;
}

std::vector<Vertex> GridBall::enumerate() const {
  std::vector<Vertex> out;
  const std::int64_t lo = std::max<std::int64_t>(1, center_.row - radius_);
  const std::int64_t hi = std::min(grid_.rows(), center_.row + radius_);
  for (std::int64_t r = lo; r <= hi; ++r) {
    const auto slice = row_slice(r);
    for (std::int64_t c = slice.lo; c <= slice.hi; ++c) out.push_back({r, c});
  }
  return out;
}

GridBall ball(const GridSpec& g, const Vertex& v, std::int64_t r) { return GridBall(g, v, r); }

std::int64_t ball_path_intersection_size(const GridSpec& g, const Vertex& v, std::int64_t r,
                                         const HorizontalPathSpec& p) {
  g.require(v);
  if (p.height < 1 || p.height > g.rows()) throw InputError("path height outside grid");
  if (r < 0) return 0;
  return GridBall(g, v, r).row_slice(p.height).length();
}

std::int64_t grid_radius(const GridSpec& g) noexcept {
  return g.rows() / 2 + g.cols() / 2;  // ceil((x-1)/2) == floor(x/2)
}

}  // namespace burnlab
