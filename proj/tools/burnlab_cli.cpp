// burnlab: exact burning numbers, schedules, strategies, bounds and lemma checks.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "burnlab/bounds.hpp"
#include "burnlab/burn_sim.hpp"
#include "burnlab/errors.hpp"
#include "burnlab/graph.hpp"
#include "burnlab/harness.hpp"
#include "burnlab/lemma_lab.hpp"
#include "burnlab/scale_validator.hpp"
#include "burnlab/serialize.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

using namespace burnlab;

namespace {

constexpr int kInputError = 1;
constexpr int kInconclusive = 2;
constexpr int kCheckFailed = 3;

GridSpec parse_grid(const std::string& text) {
  const auto x = text.find_first_of("xX");
  const auto bad = [&] { return InputError("grid must look like MxN, got '" + text + "'"); };
  if (x == std::string::npos) throw bad();
  std::int64_t m = 0, n = 0;
  try {
    std::size_t a = 0, b = 0;
    m = std::stoll(text.substr(0, x), &a);
    n = std::stoll(text.substr(x + 1), &b);
    if (a != x || b != text.size() - x - 1) throw bad();
  } catch (const std::logic_error&) {
    throw bad();
  }
  return GridSpec(m, n);
}

ExplicitGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read graph file " + path);
  return read_edge_list(in);
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw InputError("cannot write " + out_path);
  out << j.dump(2) << "\n";
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

struct HostFlags {
  std::string grid;
  std::string graph;
  std::vector<std::int64_t> heights;
  std::vector<std::int64_t> vertices;

  void attach(CLI::App* app) {
    app->add_option("--grid", grid, "implicit grid MxN");
    app->add_option("--graph", graph, "edge-list file (p N / e u v lines)");
    app->add_option("--target", heights, "burn only these rows (grid hosts)")->delimiter(',');
    app->add_option("--target-vertices", vertices, "burn only these vertex ids")->delimiter(',');
  }

  Host host(const std::optional<GridSpec>& fallback = std::nullopt) const {
    if (!grid.empty() && !graph.empty()) throw InputError("give --grid or --graph, not both");
    if (!graph.empty()) return Host(load_graph(graph));
    if (!grid.empty()) return Host(parse_grid(grid));
    if (fallback) return Host(*fallback);
    throw InputError("a host is required: --grid MxN or --graph FILE");
  }

  TargetSet target() const {
    if (!heights.empty() && !vertices.empty()) throw InputError("give --target or --target-vertices, not both");
    if (!heights.empty()) {
      std::vector<HorizontalPathSpec> paths;
      for (auto h : heights) paths.push_back({h});
      return TargetSet::paths(paths);
    }
    if (!vertices.empty()) return TargetSet::vertices(vertices);
    return TargetSet::all();
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph burning toolkit for grids and small graphs"};
  app.require_subcommand(1);
  int code = 0;
  std::function<int()> action;

  // exact
  HostFlags exact_host;
  SolverConfig solver;
  bool no_symmetry = false;
  std::string exact_out;
  auto* exact = app.add_subcommand("exact", "exact burning number with a certificate");
  exact_host.attach(exact);
  exact->add_option("--budget", solver.node_budget, "search node budget");
  exact->add_option("--threads", solver.thread_count_hint, "worker threads")->envname("BURNLAB_THREADS");
  exact->add_option("--max-horizon", solver.max_horizon, "largest horizon tried");
  exact->add_option("--vertex-cap", solver.vertex_cap, "refuse larger hosts");
  exact->add_flag("--no-symmetry", no_symmetry, "disable symmetry reduction");
  exact->add_option("-o,--out", exact_out, "write JSON here instead of stdout");
  exact->callback([&] {
    action = [&] {
      solver.symmetry_reduction = !no_symmetry;
      const auto host = exact_host.host();
      const auto result = burning_number(host, exact_host.target(), solver);
      emit(solve_result_to_json(host, result), exact_out);
      return result.solved ? 0 : kInconclusive;
    };
  });

  // simulate
  HostFlags sim_host;
  std::string schedule_file, sim_out;
  bool lenient = false;
  std::optional<std::int64_t> max_rounds;
  auto* sim = app.add_subcommand("simulate", "run a schedule and report the burn trace");
  sim->add_option("schedule", schedule_file, "schedule JSON")->required();
  sim_host.attach(sim);
  sim->add_flag("--strict,!--lenient", [&](std::int64_t count) { lenient = count < 0; },
                "reject sources lit on burned vertices (default) or skip them");
  sim->add_option("--max-rounds", max_rounds, "stop after this many rounds");
  sim->add_option("-o,--out", sim_out, "write JSON here instead of stdout");
  sim->callback([&] {
    action = [&] {
      const auto doc = load_json(schedule_file);
      std::optional<GridSpec> declared;
      if (doc.contains("m") && doc.contains("n")) declared = grid_from_json(doc);
      const auto host = sim_host.host(declared);
      SimulateOptions opts;
      opts.mode = lenient ? SimulationMode::Lenient : SimulationMode::Strict;
      opts.max_rounds = max_rounds;
      const auto trace = simulate(host, schedule_from_json(host, doc), sim_host.target(), opts);
      emit(trace_to_json(trace), sim_out);
      return trace.target_burned_round ? 0 : kCheckFailed;
    };
  });

  // strategy
  std::string strategy_name, strategy_out;
  std::int64_t sm = 1, sn = 1;
  std::int64_t simulate_cap = 1'000'000;
  auto* strat = app.add_subcommand("strategy", "build and validate a constructive schedule");
  strat->add_option("name", strategy_name, "path | multi_path | top_bottom | composed_small_c")
      ->required()
      ->check(CLI::IsMember({"path", "multi_path", "top_bottom", "composed_small_c"}));
  strat->add_option("-m", sm, "rows")->check(CLI::PositiveNumber);
  strat->add_option("-n", sn, "columns")->required()->check(CLI::PositiveNumber);
  strat->add_option("--simulate-cap", simulate_cap, "also simulate explicitly up to this many vertices");
  strat->add_option("-o,--out", strategy_out, "write JSON here instead of stdout");
  strat->callback([&] {
    action = [&] {
      StrategySchedule s;
      if (strategy_name == "path") s = path_strategy(sn);
      else if (strategy_name == "multi_path") s = multi_path_strategy(sm, sn);
      else if (strategy_name == "top_bottom") s = top_bottom_strategy(sm, sn);
      else s = composed_small_c_strategy(sm, sn);
      const auto report = validate_strategy_at_scale(s);
      Json j;
      j["schedule"] = strategy_to_json(s);
      j["validation"] = scale_report_to_json(report);
      bool ok = report.passed;
      if (s.grid.vertex_count() <= simulate_cap) {
        const auto trace = simulate(Host(s.grid), s.schedule(), s.target());
        j["simulation"] = trace_to_json(trace);
        ok = ok && trace.target_burned_round && *trace.target_burned_round <= s.claimed_rounds;
      }
      emit(j, strategy_out);
      return ok ? 0 : kCheckFailed;
    };
  });

  // bounds
  std::vector<std::string> bound_c;
  std::vector<std::int64_t> bound_n;
  std::optional<std::int64_t> bound_m;
  std::string bound_format = "json";
  auto* bnd = app.add_subcommand("bounds", "evaluate the lower and upper bound formulas");
  bnd->add_option("-c", bound_c, "fence parameter (p/q or decimal); repeatable")->delimiter(',');
  bnd->add_option("-n", bound_n, "columns; repeatable")->required()->delimiter(',');
  bnd->add_option("-m", bound_m, "rows (instead of -c)");
  bnd->add_option("--format", bound_format)->check(CLI::IsMember({"json", "csv"}));
  bnd->callback([&] {
    action = [&] {
      if (bound_c.empty() == !bound_m.has_value()) throw InputError("give either -c or -m");
      std::vector<BoundReport> reports;
      for (auto n : bound_n) {
        if (bound_m) {
          reports.push_back(evaluate_bounds(*bound_m, n));
        } else {
          for (const auto& c : bound_c) reports.push_back(evaluate_bounds(Rational::parse(c), n));
        }
      }
      if (bound_format == "csv") {
        std::cout << "c,n,m,lower,upper,finite_lower,ell_lower,ell_upper,lower_branch,upper_branch,prior_reference\n";
        for (const auto& r : reports) {
          std::ostringstream row;
          row.setf(std::ios::fixed);
          row.precision(4);
          row << r.c << "," << r.n << "," << r.m << "," << r.lower.value << "," << r.upper.value << ","
              << r.finite_lower << "," << (r.ell_lower ? std::to_string(*r.ell_lower) : "") << "," << r.ell_upper
              << "," << to_string(r.lower.branch) << "," << to_string(r.upper.branch) << "," << r.prior.cartesian;
          std::cout << row.str() << "\n";
        }
      } else {
        Json out = Json::array();
        for (const auto& r : reports) out.push_back(bound_report_to_json(r));
        std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
      }
      return 0;
    };
  });

  // table
  std::string config_file, table_csv, table_plot, table_cache;
  int table_threads = 0;
  auto* table = app.add_subcommand("table", "experiment table from a key=value config");
  table->add_option("config", config_file, "config file")->required();
  table->add_option("--csv", table_csv, "CSV output (default: config 'csv' or stdout)");
  table->add_option("--plot", table_plot, "also write an SVG scaling plot");
  table->add_option("--cache", table_cache, "cache directory")->envname("BURNLAB_CACHE");
  table->add_option("--threads", table_threads, "table workers")->envname("BURNLAB_THREADS");
  table->callback([&] {
    action = [&] {
      auto cfg = load_config(config_file);
      if (!table_csv.empty()) cfg.csv_path = table_csv;
      if (!table_plot.empty()) cfg.plot_path = table_plot;
      if (!table_cache.empty()) cfg.cache_dir = table_cache;
      if (table_threads > 0) cfg.threads = table_threads;
      const ResultCache cache(cfg.cache_dir);
      const auto rows = run_table(cfg, cache);
      const auto csv = to_csv(cfg, rows);
      if (cfg.csv_path) write_text(cfg.csv_path->string(), csv);
      else std::cout << csv;
      if (cfg.plot_path) write_text(cfg.plot_path->string(), scaling_svg(cfg, rows));
      for (const auto& r : rows) {
        bool ok = !r.exact || r.finite_lower <= *r.exact;
        for (const auto& s : r.strategy_rounds)
          if (s && r.exact && *r.exact > *s) ok = false;
        if (!ok) {
          std::cerr << "sandwich violated at m=" << r.m << " n=" << r.n << "\n";
          return kCheckFailed;
        }
      }
      return 0;
    };
  });

  // verify-lemma
  std::string lemma_id, lemma_out;
  std::int64_t lm = 0, ln = 0, lt = 0, lk = 1, trials = 200;
  std::vector<std::int64_t> lheights;
  std::uint64_t seed = kDefaultLemmaSeed;
  bool sweep = false;
  std::int64_t max_paths = 3;
  SolverConfig lemma_solver;
  auto* lemma = app.add_subcommand("verify-lemma", "check a supporting lemma on concrete instances");
  lemma->add_option("id", lemma_id, "conservation | far-paths | subgraph | product")
      ->required()
      ->check(CLI::IsMember({"conservation", "far-paths", "subgraph", "product"}));
  lemma->add_option("-m", lm, "rows (maximum rows for sweeps)");
  lemma->add_option("-n", ln, "columns (maximum columns for sweeps)");
  lemma->add_option("-t", lt, "ball radius (conservation)");
  lemma->add_option("--heights", lheights, "path heights (conservation)")->delimiter(',');
  lemma->add_option("-k", lk, "number of paths (far-paths)");
  lemma->add_flag("--sweep", sweep, "conservation: every valid configuration up to m x n");
  lemma->add_option("--max-paths", max_paths, "conservation sweep: paths per configuration");
  lemma->add_option("--trials", trials, "subgraph: random instances");
  lemma->add_option("--seed", seed, "subgraph: RNG seed");
  lemma->add_option("--budget", lemma_solver.node_budget, "solver node budget");
  lemma->add_option("--threads", lemma_solver.thread_count_hint, "solver threads")->envname("BURNLAB_THREADS");
  lemma->add_option("-o,--out", lemma_out, "write JSON here instead of stdout");
  lemma->callback([&] {
    action = [&] {
      LemmaCheckReport r;
      if (lemma_id == "conservation") {
        if (lm < 1 || ln < 1) throw InputError("conservation needs -m and -n");
        r = sweep ? conservation_sweep(lm, ln, max_paths) : check_conservation(lm, ln, lheights, lt);
      } else if (lemma_id == "far-paths") {
        r = check_far_paths_sandwich(lm, ln, lk, lemma_solver);
      } else if (lemma_id == "subgraph") {
        r = subgraph_lemma_sweep(trials, seed, lm > 0 ? lm : 4, ln > 0 ? ln : 5, lemma_solver);
      } else {
        r = check_product_bound(lm, ln, lemma_solver);
      }
      emit(lemma_report_to_json(r), lemma_out);
      if (r.verdict == Verdict::Fail) return kCheckFailed;
      return r.verdict == Verdict::Inconclusive ? kInconclusive : 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }
  try {
    code = action ? action() : 0;
  } catch (const InvalidScheduleError& e) {
    std::cerr << "invalid schedule: " << e.what() << "\n";
    return kInputError;
  } catch (const BranchInapplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  return code;
}
