#include "burnlab/burn_sim.hpp"

#include <algorithm>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {

BurningSchedule BurningSchedule::from_vertices(const std::vector<VertexId>& ids) {
  BurningSchedule s;
  s.sources.assign(ids.begin(), ids.end());
  return s;
}

BurningSchedule BurningSchedule::from_grid(const GridSpec& g, const std::vector<Vertex>& vs) {
  BurningSchedule s;
  for (const auto& v : vs) {
    g.require(v);
    s.sources.emplace_back(g.id(v));
  }
  return s;
}

namespace {

void require_simulable(const Host& host) {
  if (host.vertex_count() > kSimulationCap)
    throw ResourceError("host has " + std::to_string(host.vertex_count()) +
                        " vertices; explicit simulation cap is " + std::to_string(kSimulationCap));
}

}  // namespace

SimulationTrace simulate(const Host& host, const BurningSchedule& schedule, const TargetSet& target,
                         const SimulateOptions& options) {
  require_simulable(host);
  const auto target_mask = target.mask(host);
  for (const auto& s : schedule.sources)
    if (s && !host.contains(*s)) throw InputError("schedule source " + std::to_string(*s) + " outside host");

  const VertexId total = host.vertex_count();
  std::int64_t target_left = std::count(target_mask.begin(), target_mask.end(), 1);
  std::vector<std::int32_t> round_of(static_cast<std::size_t>(total), 0);
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;
  std::int64_t burned = 0;

  SimulationTrace trace;
  trace.schedule_length = schedule.length();
  const std::int64_t k = schedule.length();

  const auto ignite = [&](VertexId v, std::int32_t round) {
    round_of[static_cast<std::size_t>(v)] = round;
    next.push_back(v);
    ++burned;
    if (target_mask[static_cast<std::size_t>(v)]) --target_left;
  };

  for (std::int64_t t = 1;; ++t) {
    if (t > k) {
      if (target_left == 0 || frontier.empty()) break;
      if (options.max_rounds && t > *options.max_rounds) break;
    }
    const auto round = static_cast<std::int32_t>(t);
    const std::int64_t burned_before = burned;
    next.clear();
    for (VertexId v : frontier)
      host.for_each_neighbor(v, [&](VertexId w) {
        if (round_of[static_cast<std::size_t>(w)] == 0) ignite(w, round);
      });

    if (t <= k) {
      const auto& source = schedule.sources[static_cast<std::size_t>(t - 1)];
      if (source) {
        const auto was = round_of[static_cast<std::size_t>(*source)];
        if (was == 0) {
          ignite(*source, round);
        } else if (was < round) {
          if (options.mode == SimulationMode::Strict)
            throw InvalidScheduleError(t, "source " + std::to_string(t) + " (vertex " +
                                              std::to_string(*source) + ") already burned in round " +
                                              std::to_string(was));
          trace.skipped_rounds.push_back(t);
        }
      } else {
        if (burned_before < total && options.mode == SimulationMode::Strict)
          throw InvalidScheduleError(t, "round " + std::to_string(t) +
                                            " lights no source although unburned vertices remain");
        trace.skipped_rounds.push_back(t);
      }
    }

    trace.burned_counts.push_back(burned);
    if (target_left == 0 && !trace.target_burned_round) trace.target_burned_round = t;
    if (burned == total && !trace.all_burned_round) trace.all_burned_round = t;
    if (t == k) trace.target_burned_after_schedule = target_left == 0;
    frontier.swap(next);
  }
  if (k == 0) trace.target_burned_after_schedule = target_left == 0;
  if (options.record_burn_rounds) trace.burn_rounds = std::move(round_of);
  return trace;
}

namespace {

bool intervals_cover(std::vector<ColumnInterval>& pieces, std::int64_t n) {
  std::sort(pieces.begin(), pieces.end(),
            [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::int64_t reached = 0;
  for (const auto& p : pieces) {
    if (p.empty()) continue;
    if (p.lo > reached + 1) return false;
    reached = std::max(reached, p.hi);
    if (reached >= n) return true;
  }
  return reached >= n;
}

bool grid_cover(const GridSpec& g, const CoverCertificate& cover, const TargetSet& target) {
  std::vector<GridBall> balls;
  for (std::size_t i = 0; i < cover.centers.size(); ++i)
    balls.emplace_back(g, g.vertex(cover.centers[i]), cover.radius_of(i));

  if (target.vertex_ids().empty()) {
    std::vector<std::int64_t> rows;
    if (target.is_all()) {
      for (std::int64_t r = 1; r <= g.rows(); ++r) rows.push_back(r);
    } else {
      for (const auto& p : target.path_specs()) rows.push_back(p.height);
    }
    std::vector<ColumnInterval> pieces;
    for (std::int64_t row : rows) {
      pieces.clear();
      for (const auto& b : balls) pieces.push_back(b.row_slice(row));
      if (!intervals_cover(pieces, g.cols())) return false;
    }
    return true;
  }
  for (VertexId v : target.vertex_ids()) {
    const Vertex w = g.vertex(v);
    if (std::none_of(balls.begin(), balls.end(), [&](const auto& b) { return b.contains(w); }))
      return false;
  }
  return true;
}

}  // namespace

bool validate_cover(const Host& host, const CoverCertificate& cover, const TargetSet& target) {
  target.validate(host);
  for (VertexId c : cover.centers)
    if (!host.contains(c)) throw InputError("cover center " + std::to_string(c) + " outside host");
  if (host.is_grid()) return grid_cover(host.grid(), cover, target);

  const auto& graph = host.graph();
  auto uncovered = target.mask(host);
  for (std::size_t i = 0; i < cover.centers.size(); ++i) {
    const auto dist = bfs_distances(graph, cover.centers[i]);
    const std::int64_t r = cover.radius_of(i);
    for (std::size_t v = 0; v < dist.size(); ++v)
      if (dist[v] != kUnreachable && dist[v] <= r) uncovered[v] = 0;
  }
  return std::none_of(uncovered.begin(), uncovered.end(), [](char c) { return c != 0; });
}

BurningSchedule repair_cover_to_schedule(const Host& host, const CoverCertificate& cover) {
  require_simulable(host);
  for (VertexId c : cover.centers)
    if (!host.contains(c)) throw InputError("cover center " + std::to_string(c) + " outside host");

  const VertexId total = host.vertex_count();
  std::vector<std::int32_t> round_of(static_cast<std::size_t>(total), 0);
  std::vector<VertexId> frontier;
  std::vector<VertexId> next;
  BurningSchedule out;

  for (std::size_t i = 0; i < cover.centers.size(); ++i) {
    const auto round = static_cast<std::int32_t>(i + 1);
    next.clear();
    for (VertexId v : frontier)
      host.for_each_neighbor(v, [&](VertexId w) {
        if (round_of[static_cast<std::size_t>(w)] == 0) {
          round_of[static_cast<std::size_t>(w)] = round;
          next.push_back(w);
        }
      });

    std::optional<VertexId> pick;
    const VertexId wanted = cover.centers[i];
    if (round_of[static_cast<std::size_t>(wanted)] == 0 || round_of[static_cast<std::size_t>(wanted)] == round) {
      pick = wanted;
    } else {
      std::optional<VertexId> fallback;
      for (VertexId v = 0; v < total; ++v) {
        const auto r = round_of[static_cast<std::size_t>(v)];
        if (r == 0) {
          pick = v;
          break;
        }
        if (r == round && !fallback) fallback = v;
      }
      if (!pick) pick = fallback;
    }
    if (pick && round_of[static_cast<std::size_t>(*pick)] == 0) {
      round_of[static_cast<std::size_t>(*pick)] = round;
      next.push_back(*pick);
    }
    out.sources.push_back(pick);
    frontier.swap(next);
  }
  return out;
}

}  // namespace burnlab
