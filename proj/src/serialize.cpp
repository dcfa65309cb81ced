#include "burnlab/serialize.hpp"

#include <cmath>

#include "burnlab/errors.hpp"

namespace burnlab {

namespace {

/// Reals are reported to four decimals.
double round4(double v) { return std::round(v * 1e4) / 1e4; }

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::int64_t require_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("expected an integer for ") + what);
  return j.get<std::int64_t>();
}

}  // namespace

Json schedule_to_json(const Host& host, const BurningSchedule& schedule) {
  Json j;
  Json sources = Json::array();
  if (host.is_grid()) {
    const auto& g = host.grid();
    j["m"] = g.rows();
    j["n"] = g.cols();
    for (const auto& s : schedule.sources) {
      if (!s) {
        sources.push_back(nullptr);
        continue;
      }
      const auto v = g.vertex(*s);
      sources.push_back({v.row, v.col});
    }
  } else {
    j["vertices"] = host.vertex_count();
    for (const auto& s : schedule.sources) sources.push_back(s ? Json(*s) : Json(nullptr));
  }
  j["sources"] = std::move(sources);
  return j;
}

GridSpec grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n")) throw InputError("schedule has no \"m\"/\"n\" fields");
  return GridSpec(require_int(j["m"], "m"), require_int(j["n"], "n"));
}

BurningSchedule schedule_from_json(const Host& host, const Json& j) {
  if (!j.is_object() || !j.contains("sources") || !j["sources"].is_array())
    throw InputError("schedule needs a \"sources\" array");
  BurningSchedule out;
  std::size_t index = 0;
  for (const auto& s : j["sources"]) {
    ++index;
    const auto where = "source " + std::to_string(index);
    if (s.is_null()) {
      out.sources.emplace_back(std::nullopt);
    } else if (s.is_array()) {
      if (!host.is_grid() || s.size() != 2) throw InputError(where + ": [row,col] needs a grid host");
      const Vertex v{require_int(s[0], "row"), require_int(s[1], "col")};
      if (!host.grid().contains(v)) throw InputError(where + " lies outside the grid");
      out.sources.emplace_back(host.grid().id(v));
    } else {
      const auto id = require_int(s, "vertex id");
      if (!host.contains(id)) throw InputError(where + ": vertex id out of range");
      out.sources.emplace_back(id);
    }
  }
  return out;
}

Json trace_to_json(const SimulationTrace& trace) {
  Json j;
  j["schedule_length"] = trace.schedule_length;
  j["rounds_run"] = trace.rounds_run();
  j["burned_by_round"] = optional_int(trace.target_burned_round);
  j["all_burned_round"] = optional_int(trace.all_burned_round);
  j["target_burned_after_schedule"] = trace.target_burned_after_schedule;
  j["burned_counts"] = trace.burned_counts;
  j["skipped_rounds"] = trace.skipped_rounds;
  return j;
}

Json solve_result_to_json(const Host& host, const SolveResult& result) {
  Json j;
  j["solved"] = result.solved;
  j["value"] = result.value;
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["certificate"] = schedule_to_json(host, result.certificate);
  j["cover"] = result.cover.centers;
  j["stats"] = {{"nodes", result.stats.nodes},
                {"seconds", round4(result.stats.seconds)},
                {"nodes_per_horizon", result.stats.nodes_per_horizon}};
  return j;
}

Json bound_report_to_json(const BoundReport& r) {
  const auto opt = [](const std::optional<double>& v) { return v ? Json(round4(*v)) : Json(nullptr); };
  Json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["c"] = round4(r.c);
  j["lower"] = round4(r.lower.value);
  j["lower_branch"] = to_string(r.lower.branch);
  j["lower_asymptotic"] = r.lower.asymptotic;
  j["finite_lower"] = r.finite_lower;
  j["upper"] = round4(r.upper.value);
  j["upper_branch"] = to_string(r.upper.branch);
  j["upper_asymptotic"] = r.upper.asymptotic;
  j["upper_small_c"] = opt(r.upper_small_c);
  j["upper_small_c_plus_sign"] = opt(r.upper_small_c_plus);
  j["upper_large_c"] = round4(r.upper_large_c);
  j["ell_lower"] = optional_int(r.ell_lower);
  j["ell_upper"] = r.ell_upper;
  j["prior_cartesian"] = round4(r.prior.cartesian);
  j["prior_strong_product"] = round4(r.prior.strong_product);
  j["prior_in_regime"] = r.prior.in_regime;
  j["notes"] = r.notes;
  return j;
}

Json strategy_to_json(const StrategySchedule& s) {
  Json j = schedule_to_json(Host(s.grid), s.schedule());
  j["strategy"] = s.name;
  j["claimed_rounds"] = s.claimed_rounds;
  j["flood_rounds"] = s.flood_rounds;
  j["target_heights"] = s.target_heights;
  j["full_burn"] = s.full_burn;
  Json phases = Json::array();
  for (const auto& meta : s.meta) {
    Json pieces = Json::array();
    for (const auto& p : meta.pieces) pieces.push_back({{"height", p.height}, {"lo", p.cols.lo}, {"hi", p.cols.hi}});
    phases.push_back({{"phase", to_string(meta.phase)}, {"pieces", std::move(pieces)}});
  }
  j["phases"] = std::move(phases);
  j["notes"] = s.notes;
  return j;
}

Json scale_report_to_json(const ScaleReport& r) {
  Json j;
  j["passed"] = r.passed;
  j["rounds"] = r.rounds;
  j["claimed_rounds"] = r.claimed_rounds;
  Json vs = Json::array();
  for (const auto& v : r.violations)
    vs.push_back({{"kind", to_string(v.kind)},
                  {"detail", v.detail},
                  {"row", optional_int(v.witness_row)},
                  {"col", optional_int(v.witness_col)},
                  {"source", optional_int(v.witness_source)}});
  j["violations"] = std::move(vs);
  return j;
}

Json lemma_report_to_json(const LemmaCheckReport& r) {
  Json j;
  j["lemma"] = r.lemma;
  j["params"] = r.params;
  j["verdict"] = to_string(r.verdict);
  j["detail"] = r.detail;
  j["witness"] = r.witness ? Json(*r.witness) : Json(nullptr);
  j["configurations"] = r.configurations;
  j["skipped"] = r.skipped;
  j["values"] = r.values;
  return j;
}

}  // namespace burnlab
