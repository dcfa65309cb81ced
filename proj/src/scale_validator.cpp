#include "burnlab/scale_validator.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace burnlab {

const char* to_string(SourcePhase phase) noexcept {
  switch (phase) {
    case SourcePhase::PathBurning: return "path";
    case SourcePhase::Alternating: return "alternating";
    case SourcePhase::Spare: return "spare";
  }
  return "?";
}

const char* to_string(ScaleViolationKind kind) noexcept {
  switch (kind) {
    case ScaleViolationKind::PieceOutsideBall: return "piece_outside_ball";
    case ScaleViolationKind::PathGap: return "path_gap";
    case ScaleViolationKind::FloodTooFar: return "flood_too_far";
    case ScaleViolationKind::RoundsExceeded: return "rounds_exceeded";
    case ScaleViolationKind::SourceAlreadyBurned: return "source_already_burned";
  }
  return "?";
}

TargetSet StrategySchedule::target() const {
  if (full_burn) return TargetSet::all();
  std::vector<HorizontalPathSpec> paths;
  for (auto h : target_heights) paths.push_back({h});
  return TargetSet::paths(std::move(paths));
}

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

/// Prefix minimum over positions 0..size-1.
class MinFenwick {
 public:
  explicit MinFenwick(std::size_t size) : tree_(size + 1, kInf) {}

  void update(std::size_t pos, std::int64_t value) {
    for (++pos; pos < tree_.size(); pos += pos & (~pos + 1)) tree_[pos] = std::min(tree_[pos], value);
  }
  /// min over positions [0, pos].
  std::int64_t query(std::size_t pos) const {
    std::int64_t best = kInf;
    for (++pos; pos > 0; pos -= pos & (~pos + 1)) best = std::min(best, tree_[pos]);
    return best;
  }

 private:
  std::vector<std::int64_t> tree_;
};

struct RowIndex {
  std::vector<std::int64_t> cols;  // sorted distinct columns of sources on this row
  MinFenwick left{0};              // keyed ascending, stores i - c
  MinFenwick right{0};             // keyed descending, stores i + c
};

}  // namespace

std::vector<std::int64_t> burned_sources(const std::vector<Vertex>& sources) {
  std::map<std::int64_t, RowIndex> rows;
  for (const auto& v : sources) rows[v.row].cols.push_back(v.col);
  for (auto& [row, index] : rows) {
    auto& cols = index.cols;
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    index.left = MinFenwick(cols.size());
    index.right = MinFenwick(cols.size());
  }

  std::vector<std::int64_t> burned;
  for (std::size_t idx = 0; idx < sources.size(); ++idx) {
    const auto j = static_cast<std::int64_t>(idx) + 1;
    const auto& x = sources[idx];
    bool hit = false;
    for (auto& [row, index] : rows) {
      const std::int64_t dr = std::abs(row - x.row);
      if (dr > j - 1) continue;
      const auto& cols = index.cols;
      // columns <= x.col
      auto up = std::upper_bound(cols.begin(), cols.end(), x.col);
      if (up != cols.begin()) {
        const auto pos = static_cast<std::size_t>(up - cols.begin() - 1);
        const std::int64_t best = index.left.query(pos);
        if (best < kInf && best + x.col + dr <= j - 1) hit = true;
      }
      auto lo = std::lower_bound(cols.begin(), cols.end(), x.col);
      if (!hit && lo != cols.end()) {
        const auto pos = static_cast<std::size_t>(cols.end() - lo - 1);
        const std::int64_t best = index.right.query(pos);
        if (best < kInf && best - x.col + dr <= j - 1) hit = true;
      }
      if (hit) break;
    }
    if (hit) {
      burned.push_back(j);
      continue;
    }
    auto& index = rows[x.row];
    const auto at = static_cast<std::size_t>(
        std::lower_bound(index.cols.begin(), index.cols.end(), x.col) - index.cols.begin());
    index.left.update(at, j - x.col);
    index.right.update(index.cols.size() - 1 - at, j + x.col);
  }
  return burned;
}

ScaleReport validate_strategy_at_scale(const StrategySchedule& s, std::int64_t claimed_rounds) {
  ScaleReport report;
  report.claimed_rounds = claimed_rounds;
  const auto& g = s.grid;
  const std::int64_t k = s.path_rounds();
  report.rounds = k + s.flood_rounds;

  std::map<std::int64_t, std::vector<ColumnInterval>> by_height;
  for (auto h : s.target_heights) by_height[h];

  for (std::size_t i = 0; i < s.sources.size(); ++i) {
    const auto& x = s.sources[i];
    const std::int64_t r = k - 1 - static_cast<std::int64_t>(i);
    if (!g.contains(x)) {
      report.violations.push_back({ScaleViolationKind::PieceOutsideBall, "source outside grid", x.row,
                                   x.col, static_cast<std::int64_t>(i) + 1});
      continue;
    }
    if (i >= s.meta.size()) continue;
    const GridBall b(g, x, r);
    for (const auto& piece : s.meta[i].pieces) {
      if (piece.cols.empty()) continue;
      const auto slice = b.row_slice(piece.height);
      if (slice.empty() || piece.cols.lo < slice.lo || piece.cols.hi > slice.hi) {
        report.violations.push_back({ScaleViolationKind::PieceOutsideBall,
                                     "declared piece not inside ball of radius " + std::to_string(r),
                                     piece.height, piece.cols.lo, static_cast<std::int64_t>(i) + 1});
        continue;
      }
      if (auto it = by_height.find(piece.height); it != by_height.end()) it->second.push_back(piece.cols);
    }
  }

  for (auto& [height, pieces] : by_height) {
    std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.lo < b.lo; });
    std::int64_t reached = 0;
    for (const auto& p : pieces) {
      if (p.lo > reached + 1) break;
      reached = std::max(reached, p.hi);
    }
    if (reached < g.cols())
      report.violations.push_back({ScaleViolationKind::PathGap, "designated path not covered",
                                   height, reached + 1, std::nullopt});
  }

  if (s.full_burn) {
    const auto& heights = s.target_heights;
    const std::int64_t f = s.flood_rounds;
    const auto too_far = [&](std::int64_t row) {
      report.violations.push_back({ScaleViolationKind::FloodTooFar,
                                   "row farther than " + std::to_string(f) + " from every path", row,
                                   std::nullopt, std::nullopt});
    };
    if (heights.empty()) {
      too_far(1);
    } else {
      std::vector<std::int64_t> hs(heights.begin(), heights.end());
      std::sort(hs.begin(), hs.end());
      if (hs.front() - 1 > f) too_far(1);
      for (std::size_t i = 0; i + 1 < hs.size(); ++i)
        if (hs[i + 1] - hs[i] - 1 > 2 * f) too_far(hs[i] + f + 1);
      if (g.rows() - hs.back() > f) too_far(g.rows());
    }
  }

  if (report.rounds > claimed_rounds)
    report.violations.push_back({ScaleViolationKind::RoundsExceeded,
                                 std::to_string(report.rounds) + " rounds needed, " +
                                     std::to_string(claimed_rounds) + " claimed",
                                 std::nullopt, std::nullopt, std::nullopt});

  for (auto j : burned_sources(s.sources)) {
    const auto& x = s.sources[static_cast<std::size_t>(j - 1)];
    report.violations.push_back({ScaleViolationKind::SourceAlreadyBurned,
                                 "source already burned when lit", x.row, x.col, j});
  }

  report.passed = report.violations.empty();
  return report;
}

}  // namespace burnlab
