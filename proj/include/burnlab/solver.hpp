#pragma once

#include <cstdint>
#include <vector>

#include "burnlab/burn_sim.hpp"
#include "burnlab/host.hpp"

namespace burnlab {

struct SolverConfig {
  std::int64_t max_horizon = 64;
  std::int64_t node_budget = 200'000'000;
  bool symmetry_reduction = true;
  int thread_count_hint = 1;
  /// Hosts above this many vertices are refused with ResourceError.
  VertexId vertex_cap = 2'000;
};

struct SolveStats {
  std::int64_t nodes = 0;
  double seconds = 0.0;
  /// nodes_per_horizon[k-1] = search nodes spent deciding horizon k.
  std::vector<std::int64_t> nodes_per_horizon;
};

struct SolveResult {
  /// False when the node budget ran out before the value was settled.
  bool solved = false;
  /// b(G, S) when solved, otherwise equal to `lower`.
  std::int64_t value = 0;
  /// Every horizon below this was refuted by exhaustive search.
  std::int64_t lower = 0;
  /// Length of `certificate`.
  std::int64_t upper = 0;
  CoverCertificate cover;
  /// Strictly valid; simulate() confirms it burns the target in `upper` rounds.
  BurningSchedule certificate;
  SolveStats stats;
};

/// Exact b(G, S) by iterative deepening over covers with radii k-1..0.
///
/// For each horizon k the search repeatedly picks the uncovered target vertex
/// farthest from the centers chosen so far (ties to the lowest id) and
/// branches on the remaining radius and center that cover it, largest radius
/// first. A node is cut when the best coverage each remaining radius can still
/// add falls short of the uncovered count. Centers whose coverage is a subset
/// of a sibling's are skipped. On grids with a symmetric target the root may
/// instead branch on the largest ball's center restricted to one orbit
/// representative under the rectangle's symmetries.
SolveResult burning_number(const Host& host, const TargetSet& target, const SolverConfig& config = {});

/// b(G, P) for a union of horizontal paths; centers may lie anywhere.
SolveResult partial_burning_number(const GridSpec& grid, const std::vector<HorizontalPathSpec>& paths,
                                   const SolverConfig& config = {});

}  // namespace burnlab
