#pragma once

#include <cstdint>

#include "burnlab/host.hpp"

namespace burnlab {

/// Size guard for the brute-force oracle.
struct OracleLimits {
  VertexId max_vertices = 30;            ///< any k
  VertexId max_vertices_small_k = 200;   ///< when k <= small_k
  std::int64_t small_k = 3;
};

/// Exhaustive check whether some k-tuple of centers (repetition allowed),
/// with radii k-1..0, covers the target. Shares no code with the solver:
/// distances come from its own BFS and coverage from plain word masks.
/// Throws ResourceError when the instance exceeds `limits`.
bool brute_force_oracle(const Host& host, const TargetSet& target, std::int64_t k,
                        const OracleLimits& limits = {});

/// Smallest k for which brute_force_oracle returns true.
std::int64_t brute_force_burning_number(const Host& host, const TargetSet& target,
                                        const OracleLimits& limits = {});

}  // namespace burnlab
