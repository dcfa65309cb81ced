#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace burnlab {

/// Positive rational p/q, used for fence parameters given on the command line.
struct Rational {
  std::int64_t p = 1;
  std::int64_t q = 1;

  double value() const noexcept { return static_cast<double>(p) / static_cast<double>(q); }
  /// Parses "p/q", "p" or a finite decimal such as "0.25". Throws InputError.
  static Rational parse(const std::string& text);
  std::string to_string() const;
};

/// Height m = floor(c * sqrt(n)) of the fence G_{c√n, n}, in exact arithmetic.
std::int64_t fence_height(const Rational& c, std::int64_t n);

/// Largest k with (k-1)·sqrt(kn) + 1 <= c·sqrt(n); empty when c·sqrt(n) < 1.
std::optional<std::int64_t> ell_lower(double c, std::int64_t n);
/// Same with c·sqrt(n) = m exactly: largest k with (k-1)^2·k·n <= (m-1)^2.
std::int64_t ell_lower_exact(std::int64_t m, std::int64_t n);

/// ceil((c/2)^(2/3)): smallest k >= 1 with k^3 >= (c/2)^2.
std::int64_t ell_upper(double c);
std::int64_t ell_upper(const Rational& c);
/// With c = m / sqrt(n): smallest k with 4·n·k^3 >= m^2.
std::int64_t ell_upper_exact(std::int64_t m, std::int64_t n);

enum class BoundBranch {
  SmallC,  ///< 0 < c < 2 (lower) or c <= 2√2 (upper)
  LargeC,  ///< c >= 2 (lower) or the ℓ-path construction (upper)
};

const char* to_string(BoundBranch branch) noexcept;

struct BoundValue {
  double value = 0.0;
  BoundBranch branch = BoundBranch::SmallC;
  /// Carries a (1 + o(1)) factor.
  bool asymptotic = false;
};

BoundValue lower_bound(double c, std::int64_t n);
/// Minimum over the applicable upper-bound branches.
BoundValue upper_bound(double c, std::int64_t n);

/// (c/2 + sqrt(1 - c^2/16)) sqrt(n); empty when c > 2√2.
std::optional<double> small_c_upper(double c, std::int64_t n);
/// The same expression with +c^2/16 inside the radical, reported for comparison.
std::optional<double> small_c_upper_plus(double c, std::int64_t n);
/// 2·sqrt(ℓn) + ℓ - 1 with ℓ = ell_upper(c).
double large_c_upper(double c, std::int64_t n);

/// Most target vertices a ball of radius t can meet on rows 1 and m of G_{m,n}
/// (ignoring the ends of the rows).
std::int64_t two_path_capacity(std::int64_t m, std::int64_t t);

/// Smallest b whose radii b-1..0 have total two-path capacity >= |rows 1 and m|.
/// A true lower bound on b(G_{m,n}).
std::int64_t finite_two_path_lower_bound(std::int64_t m, std::int64_t n);

struct PriorBounds {
  double cartesian = 0.0;       ///< cbrt(3mn/2)
  double strong_product = 0.0;  ///< cbrt(3mn/4)
  /// Whether m^2 > 8n, i.e. the grid is taller than every fence the
  /// constructions here address; the formulas assume m grows faster than √n.
  bool in_regime = false;
};

PriorBounds reference_prior_bounds(std::int64_t m, std::int64_t n);

struct BoundReport {
  std::int64_t m = 1;
  std::int64_t n = 1;
  double c = 0.0;
  BoundValue lower;
  std::int64_t finite_lower = 0;
  BoundValue upper;
  std::optional<double> upper_small_c;
  std::optional<double> upper_small_c_plus;
  double upper_large_c = 0.0;
  std::optional<std::int64_t> ell_lower;
  std::int64_t ell_upper = 1;
  PriorBounds prior;
  std::vector<std::string> notes;
};

/// Evaluates everything for G_{m,n}, with c = m / sqrt(n).
BoundReport evaluate_bounds(std::int64_t m, std::int64_t n);
/// Evaluates everything for the fence with parameter c; m = floor(c·sqrt(n)).
BoundReport evaluate_bounds(const Rational& c, std::int64_t n);

}  // namespace burnlab
