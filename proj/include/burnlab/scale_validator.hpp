#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burnlab/strategy_schedule.hpp"

namespace burnlab {

enum class ScaleViolationKind {
  PieceOutsideBall,   ///< a declared piece is not inside its source's ball
  PathGap,            ///< (a) a designated path has an uncovered column
  FloodTooFar,        ///< (b) a row is farther than the flood radius from every path
  RoundsExceeded,     ///< (c) path rounds + flood rounds > claimed rounds
  SourceAlreadyBurned ///< a source lies inside the fire of an earlier one
};

const char* to_string(ScaleViolationKind kind) noexcept;

struct ScaleViolation {
  ScaleViolationKind kind;
  std::string detail;
  std::optional<std::int64_t> witness_row;
  std::optional<std::int64_t> witness_col;
  std::optional<std::int64_t> witness_source;  ///< 1-based
};

struct ScaleReport {
  bool passed = false;
  std::int64_t rounds = 0;  ///< path rounds + flood rounds
  std::int64_t claimed_rounds = 0;
  std::vector<ScaleViolation> violations;
};

/// Checks a strategy schedule on an implicit grid in O(k log k) per path:
/// declared pieces lie inside their balls and tile each designated path,
/// every row is within the flood radius of a designated path (full-burn
/// strategies), the round total is at most `claimed_rounds`, and no source
/// is lit on an already-burned vertex.
ScaleReport validate_strategy_at_scale(const StrategySchedule& strategy, std::int64_t claimed_rounds);
inline ScaleReport validate_strategy_at_scale(const StrategySchedule& strategy) {
  return validate_strategy_at_scale(strategy, strategy.claimed_rounds);
}

/// 1-based indices j of sources x_j that lie within distance j-1-i of some
/// earlier x_i. O(k R log k) for sources on R distinct rows.
std::vector<std::int64_t> burned_sources(const std::vector<Vertex>& sources);

}  // namespace burnlab
