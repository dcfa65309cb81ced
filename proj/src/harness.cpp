#include "burnlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "burnlab/errors.hpp"
#include "burnlab/scale_validator.hpp"
#include "burnlab/solver.hpp"
#include "burnlab/strategies.hpp"

namespace burnlab {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::int64_t parse_int(const std::string& v, std::size_t line) {
  try {
    std::size_t used = 0;
    const auto x = std::stoll(v, &used);
    if (used == v.size()) return x;
  } catch (const std::exception&) {
  }
  throw InputError("line " + std::to_string(line) + ": not an integer: '" + v + "'");
}

bool parse_bool(const std::string& v, std::size_t line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw InputError("line " + std::to_string(line) + ": not a boolean: '" + v + "'");
}

std::string fixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

bool full_burn_strategy(const std::string& name) { return name == "multi_path" || name == "composed_small_c"; }

std::optional<std::int64_t> strategy_rounds(const std::string& name, std::int64_t m, std::int64_t n) {
  try {
    const auto s = name == "multi_path" ? multi_path_strategy(m, n) : composed_small_c_strategy(m, n);
    const auto report = validate_strategy_at_scale(s);
    if (!report.passed) throw std::logic_error(name + " failed validation on " + std::to_string(m) + "x" +
                                               std::to_string(n));
    return s.claimed_rounds;
  } catch (const BranchInapplicable&) {
    return std::nullopt;
  }
}

std::string cell_params(const ExperimentConfig& cfg, const Rational& c, std::int64_t n) {
  std::ostringstream out;
  out << "c=" << c.to_string() << ";n=" << n << ";exact_max=" << cfg.exact_max_vertices
      << ";budget=" << cfg.exact_budget << ";strategies=";
  for (const auto& s : cfg.strategies) out << s << ",";
  return out.str();
}

nlohmann::json row_to_json(const ResultRow& r) {
  nlohmann::json j;
  j["m"] = r.m;
  j["n"] = r.n;
  j["exact"] = r.exact ? nlohmann::json(*r.exact) : nlohmann::json(nullptr);
  j["finite_lower"] = r.finite_lower;
  j["asym_lower"] = r.asym_lower;
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& v : r.strategy_rounds) rounds.push_back(v ? nlohmann::json(*v) : nlohmann::json(nullptr));
  j["strategy_rounds"] = rounds;
  j["formula_upper"] = r.formula_upper;
  j["prior_reference"] = r.prior_reference;
  return j;
}

ResultRow row_from_json(const nlohmann::json& j, const Rational& c) {
  ResultRow r;
  r.c = c;
  r.m = j.at("m").get<std::int64_t>();
  r.n = j.at("n").get<std::int64_t>();
  if (!j.at("exact").is_null()) r.exact = j.at("exact").get<std::int64_t>();
  r.finite_lower = j.at("finite_lower").get<std::int64_t>();
  r.asym_lower = j.at("asym_lower").get<double>();
  for (const auto& v : j.at("strategy_rounds"))
    r.strategy_rounds.push_back(v.is_null() ? std::nullopt : std::optional<std::int64_t>(v.get<std::int64_t>()));
  r.formula_upper = j.at("formula_upper").get<double>();
  r.prior_reference = j.at("prior_reference").get<double>();
  return r;
}

ResultRow compute_row(const ExperimentConfig& cfg, const Rational& c, std::int64_t n) {
  const auto start = std::chrono::steady_clock::now();
  const auto bounds = evaluate_bounds(c, n);
  ResultRow r;
  r.c = c;
  r.m = bounds.m;
  r.n = n;
  r.finite_lower = bounds.finite_lower;
  r.asym_lower = bounds.lower.value;
  r.formula_upper = bounds.upper.value;
  r.prior_reference = bounds.prior.cartesian;
  for (const auto& s : cfg.strategies) r.strategy_rounds.push_back(strategy_rounds(s, r.m, n));
  if (cfg.exact_max_vertices > 0 && r.m * n <= cfg.exact_max_vertices) {
    SolverConfig sc;
    sc.node_budget = cfg.exact_budget;
    const auto solved = burning_number(Host(GridSpec(r.m, n)), TargetSet::all(), sc);
    if (solved.solved) r.exact = solved.value;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig cfg;
  bool custom_strategies = false;
  std::istringstream in(text);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    const auto body = trim(raw);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw InputError("line " + std::to_string(line) + ": expected key = value");
    const auto key = trim(body.substr(0, eq));
    const auto value = trim(body.substr(eq + 1));
    if (value.empty()) throw InputError("line " + std::to_string(line) + ": empty value for '" + key + "'");
    try {
      if (key == "c") {
        cfg.c_values.push_back(Rational::parse(value));
      } else if (key == "n") {
        const auto n = parse_int(value, line);
        if (n < 1) throw InputError("n must be >= 1");
        cfg.n_values.push_back(n);
      } else if (key == "strategy") {
        if (!full_burn_strategy(value)) throw InputError("unknown strategy '" + value + "'");
        if (!custom_strategies) cfg.strategies.clear();
        custom_strategies = true;
        if (std::find(cfg.strategies.begin(), cfg.strategies.end(), value) == cfg.strategies.end())
          cfg.strategies.push_back(value);
      } else if (key == "exact_max_vertices") {
        cfg.exact_max_vertices = parse_int(value, line);
      } else if (key == "exact") {
        if (!parse_bool(value, line)) cfg.exact_max_vertices = 0;
      } else if (key == "budget") {
        cfg.exact_budget = parse_int(value, line);
        if (cfg.exact_budget < 1) throw InputError("budget must be positive");
      } else if (key == "csv") {
        cfg.csv_path = value;
      } else if (key == "plot") {
        cfg.plot_path = value;
      } else if (key == "cache") {
        cfg.cache_dir = value;
      } else if (key == "seed") {
        cfg.seed = static_cast<std::uint64_t>(parse_int(value, line));
      } else if (key == "threads") {
        cfg.threads = static_cast<int>(parse_int(value, line));
        if (cfg.threads < 1) throw InputError("threads must be positive");
      } else {
        throw InputError("unknown key '" + key + "'");
      }
    } catch (const InputError& e) {
      const std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      throw InputError("line " + std::to_string(line) + ": " + what);
    }
  }
  if (cfg.c_values.empty()) throw InputError("config lists no c values");
  if (cfg.n_values.empty()) throw InputError("config lists no n values");
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

ResultCache::ResultCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {
  if (dir_) std::filesystem::create_directories(*dir_);
}

std::string ResultCache::key_text(const std::string& op, const std::string& params) const {
  return op + "\n" + params + "\n" + kArtifactVersion;
}

std::filesystem::path ResultCache::file_for(const std::string& key) const {
  char name[32];
  std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a(key)));
  return *dir_ / name;
}

std::optional<std::string> ResultCache::load(const std::string& op, const std::string& params) const {
  if (!dir_) return std::nullopt;
  const auto key = key_text(op, params);
  std::ifstream in(file_for(key));
  if (!in) return std::nullopt;
  try {
    const auto j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) return std::nullopt;
    return j.at("payload").dump();
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable entries are recomputed
  }
}

void ResultCache::store(const std::string& op, const std::string& params, const std::string& payload) const {
  if (!dir_) return;
  const auto key = key_text(op, params);
  const auto path = file_for(key);
  const auto tmp = path.string() + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp);
    out << nlohmann::json{{"key", key}, {"payload", nlohmann::json::parse(payload)}}.dump(2) << "\n";
  }
  std::filesystem::rename(tmp, path);
}

std::vector<ResultRow> run_table(const ExperimentConfig& cfg, const ResultCache& cache) {
  struct Cell {
    Rational c;
    std::int64_t n;
  };
  std::vector<Cell> cells;
  for (const auto& c : cfg.c_values)
    for (auto n : cfg.n_values) {
      if (fence_height(c, n) < 1)
        throw InputError("c=" + c.to_string() + " and n=" + std::to_string(n) + " give a fence with no rows");
      cells.push_back({c, n});
    }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    const auto lhs = static_cast<__int128>(a.c.p) * b.c.q, rhs = static_cast<__int128>(b.c.p) * a.c.q;
    return lhs != rhs ? lhs < rhs : a.n < b.n;
  });
  cells.erase(std::unique(cells.begin(), cells.end(),
                          [](const Cell& a, const Cell& b) {
                            return a.c.p == b.c.p && a.c.q == b.c.q && a.n == b.n;
                          }),
              cells.end());

  std::vector<ResultRow> rows(cells.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        const auto params = cell_params(cfg, cells[i].c, cells[i].n);
        if (auto hit = cache.load("table-row", params)) {
          rows[i] = row_from_json(nlohmann::json::parse(*hit), cells[i].c);
          continue;
        }
        rows[i] = compute_row(cfg, cells[i].c, cells[i].n);
        cache.store("table-row", params, row_to_json(rows[i]).dump());
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string csv_header(const ExperimentConfig& cfg) {
  std::string h = "m,n,c,finite_lower,asym_lower,exact";
  for (const auto& s : cfg.strategies) h += "," + s + "_rounds";
  return h + ",formula_upper,prior_reference";
}

std::string to_csv(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  std::ostringstream out;
  out << csv_header(cfg) << "\n";
  for (const auto& r : rows) {
    out << r.m << "," << r.n << "," << fixed4(r.c.value()) << "," << r.finite_lower << "," << fixed4(r.asym_lower)
        << ",";
    if (r.exact) out << *r.exact;
    for (const auto& v : r.strategy_rounds) {
      out << ",";
      if (v) out << *v;
    }
    out << "," << fixed4(r.formula_upper) << "," << fixed4(r.prior_reference) << "\n";
  }
  return out.str();
}

std::string scaling_svg(const ExperimentConfig& cfg, const std::vector<ResultRow>& rows) {
  struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
  };
  std::vector<Series> series;
  const auto add = [&](const std::string& label, double x, std::optional<double> y) {
    if (!y) return;
    auto it = std::find_if(series.begin(), series.end(), [&](const Series& s) { return s.label == label; });
    if (it == series.end()) {
      series.push_back({label, {}});
      it = std::prev(series.end());
    }
    it->points.emplace_back(x, *y);
  };
  for (const auto& r : rows) {
    const double x = std::log10(static_cast<double>(r.n));
    const double root = std::sqrt(static_cast<double>(r.n));
    const std::string tag = " (c=" + r.c.to_string() + ")";
    add("finite_lower" + tag, x, r.finite_lower / root);
    add("asym_lower" + tag, x, r.asym_lower / root);
    if (r.exact) add("exact" + tag, x, *r.exact / root);
    for (std::size_t s = 0; s < cfg.strategies.size() && s < r.strategy_rounds.size(); ++s)
      if (r.strategy_rounds[s]) add(cfg.strategies[s] + tag, x, *r.strategy_rounds[s] / root);
    add("formula_upper" + tag, x, r.formula_upper / root);
    add("prior_reference" + tag, x, r.prior_reference / root);
  }

  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& s : series)
    for (const auto& [x, y] : s.points) {
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  if (series.empty()) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-9) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-9) y0 -= 0.5, y1 += 0.5;
  y0 = std::floor(y0 * 10) / 10;
  y1 = std::ceil(y1 * 10) / 10;

  const double w = 720, h = 440, left = 60, right = 250, top = 20, bottom = 50;
  const auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * (w - left - right); };
  const auto py = [&](double y) { return h - bottom - (y - y0) / (y1 - y0) * (h - top - bottom); };
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << h - bottom << "\" x2=\"" << w - right << "\" y2=\"" << h - bottom
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\"" << h - bottom
      << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double yv = y0 + (y1 - y0) * i / 4, xv = x0 + (x1 - x0) * i / 4;
    svg << "<text x=\"" << left - 6 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << fixed4(yv)
        << "</text>\n";
    svg << "<text x=\"" << px(xv) << "\" y=\"" << h - bottom + 16 << "\" text-anchor=\"middle\">" << fixed4(xv)
        << "</text>\n";
  }
  svg << "<text x=\"" << (left + w - right) / 2 << "\" y=\"" << h - 12
      << "\" text-anchor=\"middle\">log10 n</text>\n";
  svg << "<text x=\"14\" y=\"" << (top + h - bottom) / 2 << "\" transform=\"rotate(-90 14 "
      << (top + h - bottom) / 2 << ")\" text-anchor=\"middle\">rounds / sqrt(n)</text>\n";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = palette[i % 10];
    svg << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& [x, y] : series[i].points) svg << fixed4(px(x)) << "," << fixed4(py(y)) << " ";
    svg << "\"/>\n";
    const double ly = top + 14.0 * static_cast<double>(i);
    svg << "<line x1=\"" << w - right + 10 << "\" y1=\"" << ly << "\" x2=\"" << w - right + 30 << "\" y2=\"" << ly
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << w - right + 34 << "\" y=\"" << ly + 4 << "\">" << series[i].label << "</text>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace burnlab
