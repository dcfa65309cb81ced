#pragma once

#include <cstdint>
#include <vector>

#include "burnlab/strategy_schedule.hpp"

namespace burnlab {

/// ceil(sqrt(n)) sources on the 1 x n grid, greedy left to right.
StrategySchedule path_strategy(std::int64_t n);

/// Burns ℓ = ell_upper(m/√n) evenly spaced rows, then floods the rest.
StrategySchedule multi_path_strategy(std::int64_t m, std::int64_t n);

/// Burns rows 1 and m only. Sources alternate between the two rows with
/// disjoint, contiguous coverage; what is left is at most three row segments,
/// tiled with the remaining small radii. Throws BranchInapplicable when
/// m*m > 2n.
StrategySchedule top_bottom_strategy(std::int64_t m, std::int64_t n);

/// Runs the two-row construction on rows floor(m/4) and floor(3m/4)-1, then
/// floods. Throws BranchInapplicable when m*m > 8n.
StrategySchedule composed_small_c_strategy(std::int64_t m, std::int64_t n);

/// Closed-form horizon for the two-row construction:
/// ceil((m + sqrt(4n - m^2 - 2m + 1) + 1) / 2), or 0 when the radicand is negative.
std::int64_t top_bottom_reference_rounds(std::int64_t m, std::int64_t n);

/// Makes every source legal: a source lit inside an earlier fire hands its
/// pieces to that earlier source (whose ball contains its own) and moves to a
/// vertex the fire has not reached. Spare slots are placed the same way.
void strictify(StrategySchedule& s);

}  // namespace burnlab
