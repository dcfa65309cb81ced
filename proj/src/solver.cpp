#include "burnlab/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <deque>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "burnlab/errors.hpp"

namespace burnlab {

namespace {

using Word = std::uint64_t;
constexpr std::int32_t kFar = 1 << 20;

/// Precomputed distances and target-restricted ball bitsets.
struct Problem {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<VertexId> target_ids;
  std::vector<std::int32_t> dist;       // n*n, kFar when unreachable
  std::vector<std::uint32_t> near;      // per vertex, all vertices by (distance, id)
  std::vector<Word> full;               // all target bits
  std::vector<Word> balls;              // ((r * n) + c) * words
  std::int64_t radii = 0;               // balls exist for r < radii
  std::vector<std::vector<std::uint32_t>> symmetries;  // non-identity, target-preserving

  std::int32_t d(std::size_t a, std::size_t b) const { return dist[a * n + b]; }
  const Word* ball(std::int64_t r, std::size_t c) const {
    return balls.data() + (static_cast<std::size_t>(r) * n + c) * words;
  }

  void ensure_balls(std::int64_t k) {
    if (k <= radii) return;
    balls.resize(static_cast<std::size_t>(k) * n * words, 0);
    for (std::int64_t r = radii; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        Word* out = balls.data() + (static_cast<std::size_t>(r) * n + c) * words;
        for (std::size_t t = 0; t < target_ids.size(); ++t)
          if (d(c, static_cast<std::size_t>(target_ids[t])) <= r) out[t / 64] |= Word{1} << (t % 64);
      }
    radii = k;
  }
};

std::vector<std::vector<std::uint32_t>> grid_symmetries(const GridSpec& g, const std::vector<char>& mask) {
  const std::int64_t m = g.rows(), n = g.cols();
  std::vector<std::vector<std::uint32_t>> out;
  const int kinds = m == n ? 8 : 4;
  for (int s = 1; s < kinds; ++s) {
    std::vector<std::uint32_t> perm(static_cast<std::size_t>(g.vertex_count()));
    bool preserves = true;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      Vertex w = g.vertex(v);
      if (s & 1) w.col = n + 1 - w.col;
      if (s & 2) w.row = m + 1 - w.row;
      if (s & 4) std::swap(w.row, w.col);
      const VertexId image = g.id(w);
      perm[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(image);
      if (mask[static_cast<std::size_t>(v)] != mask[static_cast<std::size_t>(image)]) preserves = false;
    }
    if (preserves) out.push_back(std::move(perm));
  }
  return out;
}

Problem build_problem(const Host& host, const TargetSet& target, bool symmetric) {
  Problem p;
  p.n = static_cast<std::size_t>(host.vertex_count());
  const auto mask = target.mask(host);
  for (std::size_t v = 0; v < p.n; ++v)
    if (mask[v]) p.target_ids.push_back(static_cast<VertexId>(v));
  p.words = (p.target_ids.size() + 63) / 64;
  p.full.assign(p.words, 0);
  for (std::size_t t = 0; t < p.target_ids.size(); ++t) p.full[t / 64] |= Word{1} << (t % 64);

  p.dist.assign(p.n * p.n, kFar);
  if (host.is_grid()) {
    const auto& g = host.grid();
    for (std::size_t a = 0; a < p.n; ++a) {
      const Vertex va = g.vertex(static_cast<VertexId>(a));
      for (std::size_t b = 0; b < p.n; ++b) {
        const Vertex vb = g.vertex(static_cast<VertexId>(b));
        p.dist[a * p.n + b] = static_cast<std::int32_t>(std::abs(va.row - vb.row) + std::abs(va.col - vb.col));
      }
    }
    if (symmetric) p.symmetries = grid_symmetries(g, mask);
  } else {
    for (std::size_t s = 0; s < p.n; ++s) {
      const auto d = bfs_distances(host.graph(), static_cast<VertexId>(s));
      for (std::size_t v = 0; v < p.n; ++v)
        if (d[v] != kUnreachable) p.dist[s * p.n + v] = static_cast<std::int32_t>(d[v]);
    }
  }

  p.near.resize(p.n * p.n);
  for (std::size_t u = 0; u < p.n; ++u) {
    auto* row = p.near.data() + u * p.n;
    for (std::size_t v = 0; v < p.n; ++v) row[v] = static_cast<std::uint32_t>(v);
    std::stable_sort(row, row + p.n, [&](auto a, auto b) { return p.d(u, a) < p.d(u, b); });
  }
  return p;
}

std::size_t popcount_and(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < words; ++w) total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return total;
}

struct Branch {
  std::int64_t radius;
  std::uint32_t center;
};

struct Shared {
  std::atomic<bool> found{false};
  std::atomic<bool> exhausted{false};
  std::atomic<std::int64_t> nodes{0};
  std::int64_t budget = 0;
  std::mutex mutex;
  std::vector<std::int64_t> centers;  // by radius
};

/// Depth-first search for one horizon; one instance per worker thread.
class Searcher {
 public:
  Searcher(const Problem& p, Shared& shared, std::int64_t k)
      : p_(p), shared_(shared), k_(k), depth_cap_(static_cast<std::size_t>(k) + 1) {
    uncovered_.resize(depth_cap_ * p.words);
    mind_.resize(depth_cap_ * p.target_ids.size());
    centers_.assign(static_cast<std::size_t>(k), -1);
    cand_.resize(depth_cap_);
    cand_cov_.resize(depth_cap_);
    reset_flush();
  }

  ~Searcher() { flush_nodes(); }

  /// Node counts reach the shared counter in batches, never past the budget.
  void reset_flush() {
    const auto left = shared_.budget - shared_.nodes.load(std::memory_order_relaxed);
    flush_at_ = std::clamp<std::int64_t>(left, 1, 4096);
  }

  /// Root state: nothing covered, no centers chosen.
  void reset_root() {
    std::copy(p_.full.begin(), p_.full.end(), uncovered_.begin());
    std::fill(mind_.begin(), mind_.begin() + static_cast<std::ptrdiff_t>(p_.target_ids.size()), kFar);
  }

  /// Branches available at the root via farthest-vertex branching.
  std::vector<Branch> expand_root() {
    reset_root();
    std::vector<Branch> out;
    if (!bound_ok(0, 0)) return out;
    const std::size_t u = select(0);
    for (std::int64_t r = k_ - 1; r >= 0; --r)
      for (auto c : candidates(0, r, u)) out.push_back({r, c});
    return out;
  }

  /// Explores the subtree below one root branch.
  bool run(const Branch& b) {
    reset_root();
    apply(0, b);
    return dfs(1, Word{1} << b.radius);
  }

 private:
  void flush_nodes() {
    if (local_nodes_ == 0) return;
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

  Word* unc(std::size_t depth) { return uncovered_.data() + depth * p_.words; }
  std::int32_t* mind(std::size_t depth) { return mind_.data() + depth * p_.target_ids.size(); }

  void apply(std::size_t depth, const Branch& b) {
    const Word* from = unc(depth);
    Word* to = unc(depth + 1);
    const Word* ball = p_.ball(b.radius, b.center);
    for (std::size_t w = 0; w < p_.words; ++w) to[w] = from[w] & ~ball[w];
    const std::int32_t* md = mind(depth);
    std::int32_t* mc = mind(depth + 1);
    for (std::size_t t = 0; t < p_.target_ids.size(); ++t)
      mc[t] = std::min(md[t], p_.d(b.center, static_cast<std::size_t>(p_.target_ids[t])));
    centers_[static_cast<std::size_t>(b.radius)] = b.center;
  }

  std::size_t uncovered_count(std::size_t depth) {
    const Word* u = unc(depth);
    std::size_t total = 0;
    for (std::size_t w = 0; w < p_.words; ++w) total += static_cast<std::size_t>(std::popcount(u[w]));
    return total;
  }

  /// Counting bound: can the remaining radii still cover what is left?
  bool bound_ok(std::size_t depth, Word used) {
    const std::size_t need = uncovered_count(depth);
    const Word* u = unc(depth);
    std::size_t reach = 0;
    for (std::int64_t r = k_ - 1; r >= 0 && reach < need; --r) {
      if (used & (Word{1} << r)) continue;
      std::size_t best = 0;
      for (std::size_t c = 0; c < p_.n && best < need; ++c)
        best = std::max(best, popcount_and(p_.ball(r, c), u, p_.words));
      reach += best;
    }
    return reach >= need;
  }

  /// Uncovered target index farthest from the chosen centers; ties to the lowest id.
  std::size_t select(std::size_t depth) {
    const Word* u = unc(depth);
    const std::int32_t* md = mind(depth);
    std::size_t best = 0;
    std::int32_t best_d = -1;
    for (std::size_t w = 0; w < p_.words; ++w) {
      Word bits = u[w];
      while (bits) {
        const std::size_t t = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (md[t] > best_d) {
          best_d = md[t];
          best = t;
        }
      }
    }
    return best;
  }

  /// Centers of radius r covering target index t, dominated ones removed,
  /// ordered by new coverage (descending) then id.
  std::vector<std::uint32_t> candidates(std::size_t depth, std::int64_t r, std::size_t t) {
    auto& cand = cand_[depth];
    auto& cov = cand_cov_[depth];
    cand.clear();
    const std::size_t u = static_cast<std::size_t>(p_.target_ids[t]);
    const Word* left = unc(depth);
    const auto* order = p_.near.data() + u * p_.n;
    for (std::size_t i = 0; i < p_.n && p_.d(u, order[i]) <= r; ++i)
      cand.emplace_back(popcount_and(p_.ball(r, order[i]), left, p_.words), order[i]);
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    std::vector<std::uint32_t> kept;
    const bool prune = cand.size() <= 512;
    cov.clear();
    for (const auto& [count, c] : cand) {
      const Word* ball = p_.ball(r, c);
      bool dominated = false;
      if (prune) {
        for (std::size_t j = 0; j < kept.size() && !dominated; ++j) {
          const Word* other = cov.data() + j * p_.words;
          dominated = true;
          for (std::size_t w = 0; w < p_.words; ++w)
            if ((ball[w] & left[w]) & ~other[w]) {
              dominated = false;
              break;
            }
        }
      }
      if (dominated) continue;
      kept.push_back(c);
      if (prune)
        for (std::size_t w = 0; w < p_.words; ++w) cov.push_back(ball[w] & left[w]);
    }
    return kept;
  }

  bool dfs(std::size_t depth, Word used) {
    if (shared_.found.load(std::memory_order_relaxed) || shared_.exhausted.load(std::memory_order_relaxed))
      return false;
    if (++local_nodes_ >= flush_at_) {
      flush_nodes();
      if (shared_.nodes.load(std::memory_order_relaxed) >= shared_.budget) {
        shared_.exhausted = true;
        return false;
      }
      reset_flush();
    }
    if (uncovered_count(depth) == 0) {
      std::lock_guard lock(shared_.mutex);
      if (!shared_.found) {
        shared_.found = true;
        shared_.centers = centers_;
      }
      return true;
    }
    if (std::popcount(used) == k_ || !bound_ok(depth, used)) return false;

    const std::size_t t = select(depth);
    for (std::int64_t r = k_ - 1; r >= 0; --r) {
      if (used & (Word{1} << r)) continue;
      for (auto c : candidates(depth, r, t)) {
        apply(depth, {r, c});
        if (dfs(depth + 1, used | (Word{1} << r))) return true;
        if (shared_.found || shared_.exhausted) return false;
      }
      centers_[static_cast<std::size_t>(r)] = -1;
    }
    return false;
  }

  const Problem& p_;
  Shared& shared_;
  std::int64_t k_;
  std::size_t depth_cap_;
  std::vector<Word> uncovered_;
  std::vector<std::int32_t> mind_;
  std::vector<std::int64_t> centers_;
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> cand_;
  std::vector<std::vector<Word>> cand_cov_;
  std::int64_t local_nodes_ = 0;
  std::int64_t flush_at_ = 1;
};

/// Largest-ball centers, one per orbit of the target-preserving symmetries.
std::vector<Branch> symmetric_root(const Problem& p, std::int64_t k) {
  std::vector<Branch> out;
  for (std::uint32_t c = 0; c < p.n; ++c) {
    const bool canonical = std::all_of(p.symmetries.begin(), p.symmetries.end(),
                                       [&](const auto& perm) { return c <= perm[c]; });
    if (canonical) out.push_back({k - 1, c});
  }
  return out;
}

enum class Outcome { Found, Refuted, Exhausted };

Outcome search_horizon(const Problem& p, std::int64_t k, const SolverConfig& cfg, Shared& shared) {
  std::vector<Branch> roots;
  {
    Searcher root(p, shared, k);
    roots = root.expand_root();
    if (roots.empty()) return Outcome::Refuted;
    if (cfg.symmetry_reduction && !p.symmetries.empty()) {
      auto sym = symmetric_root(p, k);
      if (sym.size() < roots.size()) roots = std::move(sym);
    }
  }

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    Searcher s(p, shared, k);
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      if (shared.found || shared.exhausted) break;
      s.run(roots[i]);
    }
  };
  const int threads = std::max(1, std::min<int>(cfg.thread_count_hint, static_cast<int>(roots.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (shared.found) return Outcome::Found;
  return shared.exhausted ? Outcome::Exhausted : Outcome::Refuted;
}

/// Greedy cover for horizons k = from, from+1, ...; returns centers by radius.
std::vector<std::int64_t> greedy_cover(Problem& p, std::int64_t from) {
  for (std::int64_t k = std::max<std::int64_t>(from, 1);; ++k) {
    p.ensure_balls(k);
    std::vector<Word> left = p.full;
    std::vector<std::int64_t> centers(static_cast<std::size_t>(k), 0);
    for (std::int64_t r = k - 1; r >= 0; --r) {
      std::size_t best = 0, best_c = 0;
      for (std::size_t c = 0; c < p.n; ++c) {
        const auto gain = popcount_and(p.ball(r, c), left.data(), p.words);
        if (gain > best) best = gain, best_c = c;
      }
      centers[static_cast<std::size_t>(r)] = static_cast<std::int64_t>(best_c);
      const Word* ball = p.ball(r, best_c);
      for (std::size_t w = 0; w < p.words; ++w) left[w] &= ~ball[w];
    }
    if (std::all_of(left.begin(), left.end(), [](Word w) { return w == 0; })) return centers;
  }
}

CoverCertificate to_cover(const std::vector<std::int64_t>& by_radius) {
  CoverCertificate cover;
  const auto k = static_cast<std::int64_t>(by_radius.size());
  const std::int64_t filler = by_radius.empty() ? 0 : std::max<std::int64_t>(by_radius.back(), 0);
  for (std::int64_t r = k - 1; r >= 0; --r) {
    const auto c = by_radius[static_cast<std::size_t>(r)];
    cover.centers.push_back(c >= 0 ? c : filler);
  }
  return cover;
}

}  // namespace

SolveResult burning_number(const Host& host, const TargetSet& target, const SolverConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (host.vertex_count() > config.vertex_cap)
    throw ResourceError("exact solver refuses " + std::to_string(host.vertex_count()) +
                        " vertices (cap " + std::to_string(config.vertex_cap) + ")");
  if (config.max_horizon < 1 || config.max_horizon > 64 || config.node_budget < 1 || config.thread_count_hint < 1)
    throw InputError("solver caps must be positive and max_horizon at most 64");
  target.validate(host);

  Problem p = build_problem(host, target, config.symmetry_reduction);
  SolveResult result;
  Shared shared;
  shared.budget = config.node_budget;
  std::vector<std::int64_t> solution;

  std::int64_t k = 1;
  for (; k <= config.max_horizon; ++k) {
    p.ensure_balls(k);
    const auto before = shared.nodes.load();
    const Outcome outcome = search_horizon(p, k, config, shared);
    result.stats.nodes_per_horizon.push_back(shared.nodes.load() - before);
    if (outcome == Outcome::Found) {
      solution = shared.centers;
      result.solved = true;
      break;
    }
    if (outcome == Outcome::Exhausted) break;
  }
  result.lower = k;
  if (!result.solved) solution = greedy_cover(p, k);

  result.cover = to_cover(solution);
  result.certificate = repair_cover_to_schedule(host, result.cover);
  result.upper = result.certificate.length();
  result.value = result.solved ? result.upper : result.lower;

  const auto trace = simulate(host, result.certificate, target);
  if (!trace.target_burned_after_schedule)
    throw std::logic_error("solver certificate failed to burn the target");

  result.stats.nodes = shared.nodes.load();
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

SolveResult partial_burning_number(const GridSpec& grid, const std::vector<HorizontalPathSpec>& paths,
                                   const SolverConfig& config) {
  return burning_number(Host(grid), TargetSet::paths(paths), config);
}

}  // namespace burnlab
