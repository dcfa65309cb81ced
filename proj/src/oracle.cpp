#include "burnlab/oracle.hpp"

#include <deque>
#include <string>

#include "burnlab/errors.hpp"

namespace burnlab {

namespace {

using Words = std::vector<std::uint64_t>;

struct Instance {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<std::vector<int>> dist;  // all pairs, -1 when unreachable
  Words target;
  std::vector<std::vector<Words>> balls;  // [radius][center]
};

Instance build(const Host& host, const TargetSet& target) {
  Instance in;
  in.n = static_cast<std::size_t>(host.vertex_count());
  in.words = (in.n + 63) / 64;
  in.dist.assign(in.n, std::vector<int>(in.n, -1));
  for (std::size_t s = 0; s < in.n; ++s) {
    auto& d = in.dist[s];
    std::deque<std::size_t> queue{s};
    d[s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      host.for_each_neighbor(static_cast<VertexId>(u), [&](VertexId w) {
        const auto wi = static_cast<std::size_t>(w);
        if (d[wi] < 0) {
          d[wi] = d[u] + 1;
          queue.push_back(wi);
        }
      });
    }
  }
  in.target.assign(in.words, 0);
  const auto mask = target.mask(host);
  for (std::size_t v = 0; v < in.n; ++v)
    if (mask[v]) in.target[v / 64] |= std::uint64_t{1} << (v % 64);
  return in;
}

void add_balls(Instance& in, std::int64_t k) {
  in.balls.assign(static_cast<std::size_t>(k), std::vector<Words>(in.n, Words(in.words, 0)));
  for (std::size_t r = 0; r < static_cast<std::size_t>(k); ++r)
    for (std::size_t c = 0; c < in.n; ++c)
      for (std::size_t v = 0; v < in.n; ++v) {
        const int d = in.dist[c][v];
        if (d >= 0 && static_cast<std::size_t>(d) <= r) in.balls[r][c][v / 64] |= std::uint64_t{1} << (v % 64);
      }
}

bool search(const Instance& in, std::int64_t k, std::int64_t slot, Words& covered) {
  if (slot == k) {
    for (std::size_t w = 0; w < in.words; ++w)
      if ((in.target[w] & ~covered[w]) != 0) return false;
    return true;
  }
  const auto& balls = in.balls[static_cast<std::size_t>(k - 1 - slot)];
  const Words saved = covered;
  for (std::size_t c = 0; c < in.n; ++c) {
    for (std::size_t w = 0; w < in.words; ++w) covered[w] = saved[w] | balls[c][w];
    if (search(in, k, slot + 1, covered)) return true;
  }
  covered = saved;
  return false;
}

}  // namespace

bool brute_force_oracle(const Host& host, const TargetSet& target, std::int64_t k,
                        const OracleLimits& limits) {
  const VertexId n = host.vertex_count();
  const bool small = n <= limits.max_vertices || (k <= limits.small_k && n <= limits.max_vertices_small_k);
  if (!small)
    throw ResourceError("brute-force oracle refuses " + std::to_string(n) + " vertices at k=" +
                        std::to_string(k));
  if (k < 1) return false;
  Instance in = build(host, target);
  add_balls(in, k);
  Words covered(in.words, 0);
  return search(in, k, 0, covered);
}

std::int64_t brute_force_burning_number(const Host& host, const TargetSet& target,
                                        const OracleLimits& limits) {
  for (std::int64_t k = 1;; ++k)
    if (brute_force_oracle(host, target, k, limits)) return k;
}

}  // namespace burnlab
