#pragma once

#include <json.hpp>

#include "burnlab/bounds.hpp"
#include "burnlab/burn_sim.hpp"
#include "burnlab/lemma_lab.hpp"
#include "burnlab/scale_validator.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategy_schedule.hpp"

namespace burnlab {

using Json = nlohmann::ordered_json;

/// Grid hosts: {"m","n","sources":[[row,col] | null, ...]}.
/// Explicit hosts: {"vertices":N,"sources":[id | null, ...]}.
Json schedule_to_json(const Host& host, const BurningSchedule& schedule);
/// Accepts [row,col] pairs on grid hosts and plain ids on any host.
/// Throws InputError on malformed entries.
BurningSchedule schedule_from_json(const Host& host, const Json& j);
/// Grid named by the "m" and "n" fields of a schedule document.
GridSpec grid_from_json(const Json& j);

Json trace_to_json(const SimulationTrace& trace);
Json solve_result_to_json(const Host& host, const SolveResult& result);
Json bound_report_to_json(const BoundReport& report);
/// Schedule fields plus "strategy", "claimed_rounds", "flood_rounds",
/// "target_heights", "full_burn", "phases" and "notes".
Json strategy_to_json(const StrategySchedule& s);
Json scale_report_to_json(const ScaleReport& report);
Json lemma_report_to_json(const LemmaCheckReport& report);

}  // namespace burnlab
