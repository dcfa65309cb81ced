#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "burnlab/host.hpp"

namespace burnlab {

/// Ordered fire sources x_1..x_k. An empty slot is a round in which no
/// source is lit (only legal when nothing is left unburned).
struct BurningSchedule {
  std::vector<std::optional<VertexId>> sources;

  std::int64_t length() const noexcept { return static_cast<std::int64_t>(sources.size()); }
  static BurningSchedule from_vertices(const std::vector<VertexId>& ids);
  static BurningSchedule from_grid(const GridSpec& g, const std::vector<Vertex>& vs);
  bool operator==(const BurningSchedule&) const = default;
};

/// Ball-per-source view: centers[i] carries radius k-1-i, k = centers.size().
struct CoverCertificate {
  std::vector<VertexId> centers;

  std::int64_t horizon() const noexcept { return static_cast<std::int64_t>(centers.size()); }
  std::int64_t radius_of(std::size_t i) const noexcept { return horizon() - 1 - static_cast<std::int64_t>(i); }
};

enum class SimulationMode { Strict, Lenient };

struct SimulateOptions {
  SimulationMode mode = SimulationMode::Strict;
  /// Rounds past the schedule continue while the target is unburned, up to
  /// this many rounds in total (unbounded when empty).
  std::optional<std::int64_t> max_rounds;
  /// Keep the round in which each vertex burned (0 = never).
  bool record_burn_rounds = false;
};

struct SimulationTrace {
  std::int64_t schedule_length = 0;
  /// burned_counts[t-1] = |burned set| after round t.
  std::vector<std::int64_t> burned_counts;
  /// 1-based rounds whose ignition was skipped (already burned or empty slot).
  std::vector<std::int64_t> skipped_rounds;
  /// target ⊆ burned set after round k.
  bool target_burned_after_schedule = false;
  /// First round after which the target is fully burned.
  std::optional<std::int64_t> target_burned_round;
  std::optional<std::int64_t> all_burned_round;
  std::vector<std::int32_t> burn_rounds;

  std::int64_t rounds_run() const noexcept { return static_cast<std::int64_t>(burned_counts.size()); }
};

/// Upper limit on per-vertex state the simulator will allocate.
inline constexpr VertexId kSimulationCap = 50'000'000;

/// Runs the burning process. Round t: every unburned neighbour of a burned
/// vertex catches fire, and x_t (which must not have been burned at the end
/// of round t-1) is lit. Strict mode throws InvalidScheduleError on the first
/// illegal source; lenient mode records it in skipped_rounds.
SimulationTrace simulate(const Host& host, const BurningSchedule& schedule, const TargetSet& target,
                         const SimulateOptions& options = {});

/// True iff target ⊆ ∪_i B(centers[i], k-1-i). Grid hosts never materialize:
/// each target row is checked by sweeping the clipped column intervals.
bool validate_cover(const Host& host, const CoverCertificate& cover, const TargetSet& target);

/// Turns a cover into a strictly valid schedule of the same length. A center
/// that is already burned is replaced by the lowest-id vertex the fire has not
/// reached, preferring one that stays unburned through the spread of that round.
BurningSchedule repair_cover_to_schedule(const Host& host, const CoverCertificate& cover);

}  // namespace burnlab
