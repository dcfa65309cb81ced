#include "burnlab/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <string>

#include "burnlab/bounds.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/scale_validator.hpp"

namespace burnlab {

namespace {

struct Segment {
  std::int64_t row;
  ColumnInterval cols;
};

std::int64_t ceil_sqrt(std::int64_t v) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while (s * s < v) ++s;
  return s;
}

/// Sources x_1..x_k in progress; index i (0-based) has radius k-1-i.
struct Draft {
  std::int64_t k;
  std::vector<Vertex> sources;
  std::vector<SourceMeta> meta;

  explicit Draft(std::int64_t horizon)
      : k(horizon), sources(static_cast<std::size_t>(horizon)), meta(static_cast<std::size_t>(horizon)) {}
  std::int64_t radius(std::size_t i) const { return k - 1 - static_cast<std::int64_t>(i); }
};

/// Greedy left-to-right tiling of the segments with sources first, first+1, ...
/// Returns the first unused source, or nothing if the radii run out.
std::optional<std::size_t> tile(Draft& d, std::size_t first, const std::vector<Segment>& segments) {
  std::size_t i = first;
  for (const auto& seg : segments) {
    std::int64_t pos = seg.cols.lo;
    while (pos <= seg.cols.hi) {
      if (i >= d.sources.size()) return std::nullopt;
      const std::int64_t r = d.radius(i);
      d.sources[i] = {seg.row, std::min(pos + r, seg.cols.hi)};
      d.meta[i] = {SourcePhase::PathBurning, {{seg.row, {pos, std::min(pos + 2 * r, seg.cols.hi)}}}};
      pos += 2 * r + 1;
      ++i;
    }
  }
  return i;
}

void mark_spares(Draft& d, std::size_t from) {
  for (std::size_t i = from; i < d.sources.size(); ++i) {
    d.sources[i] = {1, 1};
    d.meta[i] = {SourcePhase::Spare, {}};
  }
}

/// Smallest horizon >= start for which `attempt` succeeds.
template <class Attempt>
Draft first_feasible(std::int64_t start, Attempt attempt) {
  for (std::int64_t k = std::max<std::int64_t>(start, 1);; ++k)
    if (auto d = attempt(k)) return std::move(*d);
}

std::optional<Draft> tile_rows(std::int64_t k, const std::vector<Segment>& segments) {
  Draft d(k);
  const auto used = tile(d, 0, segments);
  if (!used) return std::nullopt;
  mark_spares(d, *used);
  return d;
}

StrategySchedule finish(std::string name, const GridSpec& g, Draft&& d, std::vector<std::int64_t> heights,
                        std::int64_t flood, bool full_burn) {
  StrategySchedule s;
  s.name = std::move(name);
  s.grid = g;
  s.sources = std::move(d.sources);
  s.meta = std::move(d.meta);
  s.target_heights = std::move(heights);
  s.flood_rounds = flood;
  s.full_burn = full_burn;
  s.claimed_rounds = s.path_rounds() + flood;
  strictify(s);
  return s;
}

/// Two-row construction on rows r1 < r2 of g; returns the draft for the
/// smallest horizon at which it closes.
Draft two_rows(const GridSpec& g, std::int64_t r1, std::int64_t r2) {
  const std::int64_t n = g.cols();
  const std::int64_t gap = r2 - r1;
  const auto attempt = [&](std::int64_t k) -> std::optional<Draft> {
    Draft d(k);
    std::size_t i = 0;
    std::int64_t row = r1, col = k, t = k - 1;
    std::int64_t end1 = 0, end2 = gap;  // rightmost covered column per row
    bool alternating = t >= gap && col + t <= n;
    while (alternating) {
      const std::int64_t other = row == r1 ? r2 : r1;
      const std::int64_t reach = t - gap;
      d.sources[i] = {row, col};
      d.meta[i] = {SourcePhase::Alternating,
                   {{row, {col - t, col + t}}, {other, {col - reach, col + reach}}}};
      (row == r1 ? end1 : end2) = col + t;
      (row == r1 ? end2 : end1) = col + reach;
      ++i;
      const std::int64_t next_col = col + 2 * t - gap;
      --t;
      row = other;
      col = next_col;
      alternating = i < d.sources.size() && t >= gap && col + t <= n;
    }
    std::vector<Segment> rest;
    if (i > 0) {
      rest.push_back({r2, {1, gap}});
    } else {
      rest.push_back({r2, {1, n}});
      end2 = n;
    }
    if (end1 < n) rest.push_back({r1, {end1 + 1, n}});
    if (end2 < n) rest.push_back({r2, {end2 + 1, n}});
    std::stable_sort(rest.begin(), rest.end(),
                     [](const Segment& a, const Segment& b) { return a.cols.length() > b.cols.length(); });
    const auto used = tile(d, i, rest);
    if (!used) return std::nullopt;
    mark_spares(d, *used);
    return d;
  };
  return first_feasible(finite_two_path_lower_bound(gap + 1, n), attempt);
}

/// Largest distance from a row of g to the nearest of the (sorted) heights.
std::int64_t flood_radius(const GridSpec& g, const std::vector<std::int64_t>& heights) {
  std::int64_t f = std::max(heights.front() - 1, g.rows() - heights.back());
  for (std::size_t i = 0; i + 1 < heights.size(); ++i) f = std::max(f, (heights[i + 1] - heights[i]) / 2);
  return f;
}

/// Lowest-row, lowest-column vertex not yet burned at the end of round j
/// (1-based rounds, j sources lit). Burn time down a column is a minimum of
/// V shapes in the row, so it peaks at rows 1 or m or midway between two
/// source rows; checking those rows is exhaustive.
std::optional<Vertex> unburned_vertex(const StrategySchedule& s, std::size_t j) {
  const std::int64_t m = s.grid.rows(), n = s.grid.cols();
  std::set<std::int64_t> source_rows;
  for (std::size_t i = 0; i < j; ++i) source_rows.insert(s.sources[i].row);
  std::set<std::int64_t> rows{1, m};
  for (auto it = source_rows.begin(); it != source_rows.end(); ++it) {
    const auto next = std::next(it);
    if (next == source_rows.end()) break;
    rows.insert((*it + *next) / 2);
    rows.insert((*it + *next + 1) / 2);
  }
  std::vector<ColumnInterval> burnt;
  for (auto r : rows) {
    burnt.clear();
    for (std::size_t i = 0; i < j; ++i) {
      const auto reach = static_cast<std::int64_t>(j - 1 - i) - std::abs(s.sources[i].row - r);
      if (reach >= 0) burnt.push_back({s.sources[i].col - reach, s.sources[i].col + reach});
    }
    std::sort(burnt.begin(), burnt.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    std::int64_t reached = 0;
    for (const auto& iv : burnt) {
      if (iv.lo > reached + 1) break;
      reached = std::max(reached, iv.hi);
    }
    if (reached < n) return Vertex{r, reached + 1};
  }
  return std::nullopt;
}

/// Cuts the schedule to its first `keep` sources. Only called when the fire
/// already covers the whole grid by then, so every row is inside the balls.
void truncate(StrategySchedule& s, std::size_t keep) {
  s.sources.resize(keep);
  s.meta.assign(keep, {});
  const auto k = static_cast<std::int64_t>(keep);
  for (std::size_t i = 0; i < keep; ++i) {
    s.meta[i].phase = SourcePhase::PathBurning;
    const GridBall ball(s.grid, s.sources[i], k - 1 - static_cast<std::int64_t>(i));
    for (auto h : s.target_heights)
      if (auto slice = ball.row_slice(h); !slice.empty()) s.meta[i].pieces.push_back({h, slice});
  }
  s.notes.push_back("fire covered the grid after " + std::to_string(keep) + " rounds; schedule truncated");
}

}  // namespace

void strictify(StrategySchedule& s) {
  if (s.meta.size() < s.sources.size()) s.meta.resize(s.sources.size());
  for (;;) {
    const auto burned = burned_sources(s.sources);
    if (burned.empty()) return;
    const auto j = static_cast<std::size_t>(burned.front() - 1);
    const auto& x = s.sources[j];
    for (std::size_t i = 0; i < j; ++i) {
      const auto d = std::abs(s.sources[i].row - x.row) + std::abs(s.sources[i].col - x.col);
      if (d <= static_cast<std::int64_t>(j - 1 - i)) {
        auto& into = s.meta[i].pieces;
        into.insert(into.end(), s.meta[j].pieces.begin(), s.meta[j].pieces.end());
        break;
      }
    }
    s.meta[j] = {SourcePhase::Spare, {}};
    if (auto v = unburned_vertex(s, j)) {
      s.sources[j] = *v;
    } else {
      truncate(s, j);
    }
  }
}

std::int64_t top_bottom_reference_rounds(std::int64_t m, std::int64_t n) {
  const double radicand = 4.0 * n - static_cast<double>(m) * m - 2.0 * m + 1.0;
  if (radicand < 0) return 0;
  return static_cast<std::int64_t>(std::ceil((static_cast<double>(m) + std::sqrt(radicand) + 1.0) / 2.0));
}

StrategySchedule path_strategy(std::int64_t n) {
  if (n < 1) throw InputError("path length must be positive");
  const GridSpec g(1, n);
  auto d = first_feasible(ceil_sqrt(n), [&](std::int64_t k) { return tile_rows(k, {{1, {1, n}}}); });
  return finish("path", g, std::move(d), {1}, 0, true);
}

StrategySchedule multi_path_strategy(std::int64_t m, std::int64_t n) {
  const GridSpec g(m, n);
  const std::int64_t ell = ell_upper_exact(m, n);
  const std::int64_t s = ceil_sqrt(ell * n);
  std::vector<std::int64_t> heights;
  for (std::int64_t i = 0; i < ell; ++i) heights.push_back(std::clamp((2 * s + 1) * i + s + 1, std::int64_t{1}, m));
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());

  std::vector<Segment> rows;
  for (auto h : heights) rows.push_back({h, {1, n}});
  const auto paths = static_cast<std::int64_t>(heights.size());
  auto d = first_feasible(ceil_sqrt(paths * n), [&](std::int64_t k) { return tile_rows(k, rows); });
  const auto flood = flood_radius(g, heights);
  auto out = finish("multi_path", g, std::move(d), heights, flood, true);
  out.notes.push_back("ell=" + std::to_string(ell) + " spacing=" + std::to_string(2 * s + 1));
  if (paths < ell)
    out.notes.push_back("grid too short for " + std::to_string(ell) + " distinct rows; using " +
                        std::to_string(paths));
  return out;
}

StrategySchedule top_bottom_strategy(std::int64_t m, std::int64_t n) {
  const GridSpec g(m, n);
  if (m * m > 2 * n)
    throw BranchInapplicable("two-row construction needs m <= floor(sqrt(2n)); got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
  if (m == 1) {
    auto d = first_feasible(ceil_sqrt(n), [&](std::int64_t k) { return tile_rows(k, {{1, {1, n}}}); });
    auto out = finish("top_bottom", g, std::move(d), {1}, 0, false);
    out.notes.push_back("single row: top and bottom coincide");
    return out;
  }
  auto out = finish("top_bottom", g, two_rows(g, 1, m), {1, m}, 0, false);
  out.notes.push_back("reference horizon " + std::to_string(top_bottom_reference_rounds(m, n)));
  return out;
}

StrategySchedule composed_small_c_strategy(std::int64_t m, std::int64_t n) {
  const GridSpec g(m, n);
  if (m * m > 8 * n)
    throw BranchInapplicable("composed construction needs m <= floor(2*sqrt(2n)); got m=" + std::to_string(m) +
                             ", n=" + std::to_string(n));
  const std::int64_t lo = std::max<std::int64_t>(1, m / 4);
  const std::int64_t hi = 3 * m / 4 - 1;
  if (m <= 3 || hi <= lo) {
    const std::int64_t mid = (m + 1) / 2;
    auto d = first_feasible(ceil_sqrt(n), [&](std::int64_t k) { return tile_rows(k, {{mid, {1, n}}}); });
    auto out = finish("composed_small_c", g, std::move(d), {mid}, std::max(mid - 1, m - mid), true);
    out.notes.push_back("grid too short for two inner rows; burned the middle row instead");
    return out;
  }
  std::vector<std::int64_t> heights{lo, hi};
  auto out = finish("composed_small_c", g, two_rows(g, lo, hi), heights, flood_radius(g, heights), true);
  out.notes.push_back("inner rows " + std::to_string(lo) + " and " + std::to_string(hi));
  return out;
}

}  // namespace burnlab
