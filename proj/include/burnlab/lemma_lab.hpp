#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "burnlab/graph.hpp"
#include "burnlab/solver.hpp"

namespace burnlab {

enum class Verdict {
  Pass,
  Fail,
  Skip,          ///< hypothesis not met; the lemma makes no claim
  Inconclusive,  ///< the exact solver ran out of budget
};

const char* to_string(Verdict v) noexcept;

struct LemmaCheckReport {
  std::string lemma;
  std::map<std::string, std::string> params;
  Verdict verdict = Verdict::Pass;
  std::string detail;
  /// Set whenever verdict == Fail.
  std::optional<std::string> witness;
  std::int64_t configurations = 0;
  std::int64_t skipped = 0;
  /// Measured quantities (maxima, exact values, bound sides).
  std::map<std::string, std::int64_t> values;
};

inline constexpr std::uint64_t kDefaultLemmaSeed = 20240601;

/// Compares max over all v of |B(v,t) ∩ P| with the max over v on P, where
/// P is the union of the rows at `heights`. Skips unless heights are strictly
/// increasing, h_i - h_{i-2} >= 2t+2, and 2t <= n-1; the maxima are still
/// reported for skipped instances.
LemmaCheckReport check_conservation(std::int64_t m, std::int64_t n, const std::vector<std::int64_t>& heights,
                                    std::int64_t t);

/// Every hypothesis-satisfying (heights, t) with up to `max_paths` rows on
/// every grid up to max_m x max_n.
LemmaCheckReport conservation_sweep(std::int64_t max_m, std::int64_t max_n, std::int64_t max_paths);

/// k rows at heights 1 + (i-1)·ceil(sqrt(kn)); asserts
/// ceil(sqrt(kn)) <= b(G_{m,n}, P) <= ceil(sqrt(kn)) + k - 1.
LemmaCheckReport check_far_paths_sandwich(std::int64_t m, std::int64_t n, std::int64_t k,
                                          const SolverConfig& config = {});

/// b(G,X) <= b(H,X) <= b(G,X) + |E(G)| - |E(H)| for a subgraph H of G.
/// `x` holds ids of G and must lie in the image of h.to_parent.
LemmaCheckReport check_subgraph_lemma(const ExplicitGraph& g, const Subgraph& h, const std::vector<VertexId>& x,
                                      const SolverConfig& config = {});

/// `trials` random (G, H, X): G a grid up to max_m x max_n, H obtained by
/// deleting random edges (and, every other trial, random vertices), X a
/// random nonempty subset of V(H).
LemmaCheckReport subgraph_lemma_sweep(std::int64_t trials, std::uint64_t seed, std::int64_t max_m,
                                      std::int64_t max_n, const SolverConfig& config = {});

/// b(G_{m,n}) <= min(ceil(sqrt n) + floor(m/2), ceil(sqrt m) + floor(n/2)).
LemmaCheckReport check_product_bound(std::int64_t m, std::int64_t n, const SolverConfig& config = {});

}  // namespace burnlab
