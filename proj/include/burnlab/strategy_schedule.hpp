#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "burnlab/burn_sim.hpp"
#include "burnlab/grid.hpp"

namespace burnlab {

/// Columns [cols.lo, cols.hi] of the target path at `height` that a source
/// is responsible for burning by the end of the path phase.
struct CoveragePiece {
  std::int64_t height = 1;
  ColumnInterval cols;

  bool operator==(const CoveragePiece&) const = default;
};

enum class SourcePhase {
  PathBurning,  ///< tiles a stretch of a designated path
  Alternating,  ///< top/bottom alternation; burns pieces of both paths
  Spare,        ///< carries no coverage duty
};

const char* to_string(SourcePhase phase) noexcept;

struct SourceMeta {
  SourcePhase phase = SourcePhase::PathBurning;
  std::vector<CoveragePiece> pieces;
};

/// A grid schedule plus the structure needed to validate it without
/// materializing the grid: each source declares what it covers, the
/// designated paths are burned after `sources.size()` rounds, and the rest
/// of the grid after `flood_rounds` more.
struct StrategySchedule {
  std::string name;
  GridSpec grid{1, 1};
  std::vector<Vertex> sources;
  std::vector<SourceMeta> meta;
  std::vector<std::int64_t> target_heights;
  std::int64_t flood_rounds = 0;
  /// Whether the schedule claims to burn every vertex (flood phase included)
  /// or only the designated paths.
  bool full_burn = true;
  std::int64_t claimed_rounds = 0;
  std::vector<std::string> notes;

  std::int64_t path_rounds() const noexcept { return static_cast<std::int64_t>(sources.size()); }
  BurningSchedule schedule() const { return BurningSchedule::from_grid(grid, sources); }
  TargetSet target() const;
};

}  // namespace burnlab
