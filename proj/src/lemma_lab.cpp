#include "burnlab/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "burnlab/errors.hpp"
#include "burnlab/grid.hpp"
#include "burnlab/host.hpp"

namespace burnlab {

namespace {

std::int64_t ceil_sqrt(std::int64_t v) {
  auto s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (s * s > v) --s;
  while (s * s < v) ++s;
  return s;
}

std::string join(const std::vector<std::int64_t>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
  return out.str();
}

/// |B(v,t) ∩ P| on G_{m,n}, row by row.
std::int64_t hits(std::int64_t n, std::int64_t row, std::int64_t col, const std::vector<std::int64_t>& heights,
                  std::int64_t t) {
  std::int64_t total = 0;
  for (auto h : heights) {
    const auto w = t - std::abs(row - h);
    if (w < 0) continue;
    total += std::min(n, col + w) - std::max<std::int64_t>(1, col - w) + 1;
  }
  return total;
}

bool conservation_hypothesis(std::int64_t m, std::int64_t n, const std::vector<std::int64_t>& heights,
                             std::int64_t t) {
  if (heights.empty() || t < 0 || 2 * t > n - 1) return false;
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (heights[i] < 1 || heights[i] > m) return false;
    if (i >= 1 && heights[i] <= heights[i - 1]) return false;
    if (i >= 2 && heights[i] - heights[i - 2] < 2 * t + 2) return false;
  }
  return true;
}

void absorb(LemmaCheckReport& total, const LemmaCheckReport& one) {
  total.configurations += one.configurations;
  total.skipped += one.skipped;
  if (total.verdict == Verdict::Fail) return;
  if (one.verdict == Verdict::Fail) {
    total.verdict = Verdict::Fail;
    total.detail = one.detail;
    total.witness = one.witness;
  } else if (one.verdict == Verdict::Inconclusive) {
    total.verdict = Verdict::Inconclusive;
    total.detail = one.detail;
  }
}

}  // namespace

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skip: return "skip";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

LemmaCheckReport check_conservation(std::int64_t m, std::int64_t n, const std::vector<std::int64_t>& heights,
                                    std::int64_t t) {
  const GridSpec g(m, n);
  LemmaCheckReport r;
  r.lemma = "conservation";
  r.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"heights", join(heights)},
              {"t", std::to_string(t)}};
  if (t < 0) throw InputError("t must be nonnegative");
  for (auto h : heights)
    if (h < 1 || h > g.rows()) throw InputError("height " + std::to_string(h) + " outside the grid");

  std::int64_t best_all = 0, best_path = 0;
  Vertex arg_all{1, 1};
  for (std::int64_t row = 1; row <= m; ++row) {
    const bool on_path = std::find(heights.begin(), heights.end(), row) != heights.end();
    for (std::int64_t col = 1; col <= n; ++col) {
      const auto c = hits(n, row, col, heights, t);
      if (c > best_all) best_all = c, arg_all = {row, col};
      if (on_path) best_path = std::max(best_path, c);
    }
  }
  r.values = {{"max_all", best_all}, {"max_on_paths", best_path}};
  r.configurations = 1;
  if (!conservation_hypothesis(m, n, heights, t)) {
    r.verdict = Verdict::Skip;
    r.skipped = 1;
    r.detail = best_all == best_path ? "hypothesis not met (maxima agree)" : "hypothesis not met (maxima differ)";
    return r;
  }
  if (best_all != best_path) {
    r.verdict = Verdict::Fail;
    r.detail = "off-path vertex meets more of P than any path vertex";
    r.witness = "v=(" + std::to_string(arg_all.row) + "," + std::to_string(arg_all.col) + ") hits " +
                std::to_string(best_all) + " > " + std::to_string(best_path);
  }
  return r;
}

LemmaCheckReport conservation_sweep(std::int64_t max_m, std::int64_t max_n, std::int64_t max_paths) {
  LemmaCheckReport total;
  total.lemma = "conservation";
  total.params = {{"max_m", std::to_string(max_m)}, {"max_n", std::to_string(max_n)},
                  {"max_paths", std::to_string(max_paths)}};
  std::vector<std::int64_t> hs;
  for (std::int64_t m = 1; m <= max_m; ++m)
    for (std::int64_t n = 1; n <= max_n; ++n)
      for (std::int64_t t = 0; 2 * t <= n - 1; ++t) {
        // strictly increasing height tuples of length 1..max_paths
        const auto visit = [&](auto&& self, std::int64_t from) -> void {
          if (!hs.empty() && conservation_hypothesis(m, n, hs, t)) {
            auto one = check_conservation(m, n, hs, t);
            absorb(total, one);
          }
          if (static_cast<std::int64_t>(hs.size()) == max_paths) return;
          for (std::int64_t h = from; h <= m; ++h) {
            hs.push_back(h);
            if (conservation_hypothesis(m, n, hs, t)) self(self, h + 1);
            hs.pop_back();
          }
        };
        visit(visit, 1);
      }
  total.values = {{"configurations", total.configurations}};
  return total;
}

LemmaCheckReport check_far_paths_sandwich(std::int64_t m, std::int64_t n, std::int64_t k,
                                          const SolverConfig& config) {
  LemmaCheckReport r;
  r.lemma = "far_paths";
  r.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}, {"k", std::to_string(k)}};
  if (m < 1 || n < 1 || k < 1) throw InputError("m, n and k must be positive");
  const auto root = ceil_sqrt(k * n);
  std::vector<HorizontalPathSpec> paths;
  for (std::int64_t i = 0; i < k; ++i) paths.push_back({1 + i * root});
  r.configurations = 1;
  if (paths.back().height > m) {
    r.verdict = Verdict::Skip;
    r.skipped = 1;
    r.detail = "rows spaced ceil(sqrt(kn)) apart do not fit";
    return r;
  }
  const auto solved = partial_burning_number(GridSpec(m, n), paths, config);
  r.values = {{"lower", root}, {"upper", root + k - 1}, {"b", solved.value}, {"b_lower", solved.lower},
              {"b_upper", solved.upper}};
  if (!solved.solved) {
    r.verdict = Verdict::Inconclusive;
    r.detail = "exact solver ran out of budget";
    return r;
  }
  if (solved.value < root || solved.value > root + k - 1) {
    r.verdict = Verdict::Fail;
    r.detail = "b(G,P) outside [ceil(sqrt(kn)), ceil(sqrt(kn))+k-1]";
    r.witness = "b=" + std::to_string(solved.value);
  }
  return r;
}

LemmaCheckReport check_subgraph_lemma(const ExplicitGraph& g, const Subgraph& h, const std::vector<VertexId>& x,
                                      const SolverConfig& config) {
  LemmaCheckReport r;
  r.lemma = "subgraph";
  r.params = {{"g_vertices", std::to_string(g.vertex_count())}, {"g_edges", std::to_string(g.edge_count())},
              {"h_vertices", std::to_string(h.graph.vertex_count())},
              {"h_edges", std::to_string(h.graph.edge_count())}, {"x", join(x)}};
  if (static_cast<VertexId>(h.to_parent.size()) != h.graph.vertex_count())
    throw InputError("subgraph map has the wrong size");
  std::vector<VertexId> local(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t v = 0; v < h.to_parent.size(); ++v) {
    const auto p = h.to_parent[v];
    if (p < 0 || p >= g.vertex_count() || local[static_cast<std::size_t>(p)] != -1)
      throw InputError("subgraph map is not injective into G");
    local[static_cast<std::size_t>(p)] = static_cast<VertexId>(v);
  }
  for (const auto& [a, b] : h.graph.edges())
    if (!g.has_edge(h.to_parent[static_cast<std::size_t>(a)], h.to_parent[static_cast<std::size_t>(b)]))
      throw InputError("H has an edge that G lacks");
  std::vector<VertexId> x_in_h;
  for (auto v : x) {
    if (v < 0 || v >= g.vertex_count() || local[static_cast<std::size_t>(v)] == -1)
      throw InputError("X is not contained in V(H)");
    x_in_h.push_back(local[static_cast<std::size_t>(v)]);
  }

  const auto bg = burning_number(Host(g), TargetSet::vertices(x), config);
  const auto bh = burning_number(Host(h.graph), TargetSet::vertices(x_in_h), config);
  const auto removed = static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(h.graph.edge_count());
  r.configurations = 1;
  r.values = {{"b_g", bg.value}, {"b_h", bh.value}, {"removed_edges", removed}};
  if (!bg.solved || !bh.solved) {
    r.verdict = Verdict::Inconclusive;
    r.detail = "exact solver ran out of budget";
    return r;
  }
  if (bg.value > bh.value || bh.value > bg.value + removed) {
    r.verdict = Verdict::Fail;
    r.detail = "b(G,X) <= b(H,X) <= b(G,X) + |E(G)| - |E(H)| violated";
    r.witness = "b(G,X)=" + std::to_string(bg.value) + " b(H,X)=" + std::to_string(bh.value) +
                " removed=" + std::to_string(removed);
  }
  return r;
}

LemmaCheckReport subgraph_lemma_sweep(std::int64_t trials, std::uint64_t seed, std::int64_t max_m,
                                      std::int64_t max_n, const SolverConfig& config) {
  if (trials < 0 || max_m < 1 || max_n < 1 || max_m * max_n < 2) throw InputError("bad sweep parameters");
  LemmaCheckReport total;
  total.lemma = "subgraph";
  total.params = {{"trials", std::to_string(trials)}, {"seed", std::to_string(seed)},
                  {"max_m", std::to_string(max_m)}, {"max_n", std::to_string(max_n)}};
  std::mt19937_64 rng(seed);
  const auto pick = [&](std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
  };
  const auto coin = [&](double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; };

  for (std::int64_t trial = 0; trial < trials; ++trial) {
    std::int64_t m, n;
    do {
      m = pick(1, max_m);
      n = pick(1, max_n);
    } while (m * n < 2);
    const auto g = explicit_from_grid(GridSpec(m, n));

    Subgraph h{g, {}};
    for (VertexId v = 0; v < g.vertex_count(); ++v) h.to_parent.push_back(v);
    if (trial % 2 == 1) {
      std::vector<VertexId> gone;
      const auto count = pick(1, std::min<std::int64_t>(2, g.vertex_count() - 1));
      while (static_cast<std::int64_t>(gone.size()) < count) {
        const auto v = pick(0, g.vertex_count() - 1);
        if (std::find(gone.begin(), gone.end(), v) == gone.end()) gone.push_back(v);
      }
      h = remove_vertices(g, gone);
    }
    std::vector<Edge> cut;
    for (const auto& e : h.graph.edges())
      if (coin(0.25)) cut.push_back(e);
    h.graph = remove_edges(h.graph, cut);

    std::vector<VertexId> x;
    for (VertexId v = 0; v < h.graph.vertex_count(); ++v)
      if (coin(0.5)) x.push_back(h.to_parent[static_cast<std::size_t>(v)]);
    if (x.empty()) x.push_back(h.to_parent[static_cast<std::size_t>(pick(0, h.graph.vertex_count() - 1))]);

    auto one = check_subgraph_lemma(g, h, x, config);
    if (one.verdict == Verdict::Fail)
      one.witness = "trial " + std::to_string(trial) + " on " + std::to_string(m) + "x" + std::to_string(n) + ": " +
                    one.witness.value_or("");
    absorb(total, one);
  }
  total.values = {{"configurations", total.configurations}};
  return total;
}

LemmaCheckReport check_product_bound(std::int64_t m, std::int64_t n, const SolverConfig& config) {
  LemmaCheckReport r;
  r.lemma = "product_bound";
  r.params = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  const GridSpec g(m, n);
  const auto bound = std::min(ceil_sqrt(n) + m / 2, ceil_sqrt(m) + n / 2);
  const auto solved = burning_number(Host(g), TargetSet::all(), config);
  r.configurations = 1;
  r.values = {{"b", solved.value}, {"bound", bound}, {"b_upper", solved.upper}};
  if (!solved.solved) {
    // a certificate within the bound still settles the inequality
    if (solved.upper <= bound) return r;
    r.verdict = Verdict::Inconclusive;
    r.detail = "exact solver ran out of budget";
    return r;
  }
  if (solved.value > bound) {
    r.verdict = Verdict::Fail;
    r.detail = "b(G_{m,n}) exceeds min(b(P_n)+rad(P_m), b(P_m)+rad(P_n))";
    r.witness = "b=" + std::to_string(solved.value) + " bound=" + std::to_string(bound);
  }
  return r;
}

}  // namespace burnlab
