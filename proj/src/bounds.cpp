#include "burnlab/bounds.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

#include "burnlab/errors.hpp"

namespace burnlab {

namespace {

using i128 = __int128;

void require_n(std::int64_t n) {
  if (n < 1) throw InputError("n must be positive");
}

void require_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw InputError("c must be a positive finite number");
}

/// Largest x >= 0 with x*x <= v.
std::int64_t isqrt(i128 v) {
  auto x = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(v)));
  while (x > 0 && static_cast<i128>(x) * x > v) --x;
  while (static_cast<i128>(x + 1) * (x + 1) <= v) ++x;
  return x;
}

double lower_with(double c, std::int64_t n, std::optional<std::int64_t> ell, BoundValue& out) {
  const double rn = std::sqrt(static_cast<double>(n));
  if (c < 2.0) {
    out = {(c / 2.0 + std::sqrt(1.0 - c * c / 4.0)) * rn, BoundBranch::SmallC, true};
  } else {
    out = {std::sqrt(static_cast<double>(ell.value_or(1)) * static_cast<double>(n)), BoundBranch::LargeC, false};
  }
  return out.value;
}

double large_with(std::int64_t ell, std::int64_t n) {
  const auto l = static_cast<double>(ell);
  return 2.0 * std::sqrt(l * static_cast<double>(n)) + l - 1.0;
}

BoundValue upper_with(double c, std::int64_t n, std::int64_t ell) {
  BoundValue out{large_with(ell, n), BoundBranch::LargeC, false};
  if (auto small = small_c_upper(c, n); small && *small < out.value) out = {*small, BoundBranch::SmallC, true};
  return out;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
  const auto fail = [&] { return InputError("not a positive rational: '" + text + "'"); };
  if (text.empty()) throw fail();
  std::int64_t p = 0, q = 1;
  std::size_t i = 0;
  bool digits = false;
  for (; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, digits = true) {
    if (p > (INT64_MAX - 9) / 10) throw fail();
    p = p * 10 + (text[i] - '0');
  }
  if (i < text.size() && text[i] == '.') {
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, digits = true) {
      if (p > (INT64_MAX - 9) / 10 || q > INT64_MAX / 10) throw fail();
      p = p * 10 + (text[i] - '0');
      q *= 10;
    }
  } else if (i < text.size() && text[i] == '/') {
    std::int64_t d = 0;
    bool denominator = false;
    for (++i; i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])); ++i, denominator = true) {
      if (d > (INT64_MAX - 9) / 10) throw fail();
      d = d * 10 + (text[i] - '0');
    }
    if (!denominator) throw fail();
    q = d;
  }
  if (!digits || i != text.size() || p == 0 || q == 0) throw fail();
  const auto g = std::gcd(p, q);
  return {p / g, q / g};
}

std::string Rational::to_string() const {
  return q == 1 ? std::to_string(p) : std::to_string(p) + "/" + std::to_string(q);
}

std::int64_t fence_height(const Rational& c, std::int64_t n) {
  require_n(n);
  // largest m with m^2 q^2 <= p^2 n
  const i128 num = static_cast<i128>(c.p) * c.p * n;
  std::int64_t m = isqrt(num / (static_cast<i128>(c.q) * c.q));
  while (static_cast<i128>(m + 1) * (m + 1) * c.q * c.q <= num) ++m;
  while (m > 0 && static_cast<i128>(m) * m * c.q * c.q > num) --m;
  return m;
}

std::optional<std::int64_t> ell_lower(double c, std::int64_t n) {
  require_c(c);
  require_n(n);
  const double height = c * std::sqrt(static_cast<double>(n));
  if (height < 1.0) return std::nullopt;
  std::int64_t k = 1;
  while (static_cast<double>(k) * std::sqrt(static_cast<double>(k + 1) * static_cast<double>(n)) + 1.0 <= height) ++k;
  return k;
}

std::int64_t ell_lower_exact(std::int64_t m, std::int64_t n) {
  require_n(n);
  if (m < 1) throw InputError("m must be positive");
  const i128 budget = static_cast<i128>(m - 1) * (m - 1);
  std::int64_t k = 1;
  while (static_cast<i128>(k) * k * (k + 1) * n <= budget) ++k;
  return k;
}

std::int64_t ell_upper(double c) {
  require_c(c);
  const double target = (c / 2.0) * (c / 2.0);
  auto k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::cbrt(target))));
  while (k > 1 && std::pow(static_cast<double>(k - 1), 3) >= target) --k;
  while (std::pow(static_cast<double>(k), 3) < target) ++k;
  return k;
}

std::int64_t ell_upper(const Rational& c) {
  if (c.p < 1 || c.q < 1) throw InputError("c must be positive");
  const i128 need = static_cast<i128>(c.p) * c.p;
  const i128 scale = static_cast<i128>(4) * c.q * c.q;
  std::int64_t k = 1;
  while (scale * k * k * k < need) ++k;
  return k;
}

std::int64_t ell_upper_exact(std::int64_t m, std::int64_t n) {
  require_n(n);
  if (m < 1) throw InputError("m must be positive");
  const i128 need = static_cast<i128>(m) * m;
  std::int64_t k = 1;
  while (static_cast<i128>(4) * n * k * k * k < need) ++k;
  return k;
}

const char* to_string(BoundBranch branch) noexcept {
  return branch == BoundBranch::SmallC ? "small_c" : "large_c";
}

BoundValue lower_bound(double c, std::int64_t n) {
  require_c(c);
  require_n(n);
  BoundValue out;
  lower_with(c, n, c >= 2.0 ? ell_lower(c, n) : std::nullopt, out);
  return out;
}

std::optional<double> small_c_upper(double c, std::int64_t n) {
  require_c(c);
  require_n(n);
  if (c > 2.0 * std::sqrt(2.0)) return std::nullopt;
  return (c / 2.0 + std::sqrt(1.0 - c * c / 16.0)) * std::sqrt(static_cast<double>(n));
}

std::optional<double> small_c_upper_plus(double c, std::int64_t n) {
  require_c(c);
  require_n(n);
  if (c > 2.0 * std::sqrt(2.0)) return std::nullopt;
  return (c / 2.0 + std::sqrt(1.0 + c * c / 16.0)) * std::sqrt(static_cast<double>(n));
}

double large_c_upper(double c, std::int64_t n) {
  require_n(n);
  return large_with(ell_upper(c), n);
}

BoundValue upper_bound(double c, std::int64_t n) {
  require_c(c);
  require_n(n);
  return upper_with(c, n, ell_upper(c));
}

std::int64_t two_path_capacity(std::int64_t m, std::int64_t t) {
  if (m < 1 || t < 0) throw InputError("two_path_capacity needs m >= 1 and t >= 0");
  if (m == 1) return 2 * t + 1;
  if (t <= m - 2) return 2 * t + 1;
  return 4 * t - 2 * m + 4;
}

std::int64_t finite_two_path_lower_bound(std::int64_t m, std::int64_t n) {
  require_n(n);
  if (m < 1) throw InputError("m must be positive");
  if (m == 1) {
    const auto s = isqrt(n);
    return s * s == n ? s : s + 1;
  }
  // Σ_{t<b} capacity(t) = b^2 for b <= m-1 and m^2 + 1 + 2(b-m)(b+1) for b >= m.
  const i128 need = static_cast<i128>(2) * n;
  const auto reach = [m](std::int64_t b) -> i128 {
    if (b <= m - 1) return static_cast<i128>(b) * b;
    return static_cast<i128>(m) * m + 1 + static_cast<i128>(2) * (b - m) * (b + 1);
  };
  std::int64_t lo = 0, hi = 1;
  while (reach(hi) < need) hi *= 2;
  while (hi - lo > 1) {
    const auto mid = lo + (hi - lo) / 2;
    (reach(mid) >= need ? hi : lo) = mid;
  }
  return hi;
}

PriorBounds reference_prior_bounds(std::int64_t m, std::int64_t n) {
  require_n(n);
  if (m < 1) throw InputError("m must be positive");
  const double mn = static_cast<double>(m) * static_cast<double>(n);
  return {std::cbrt(1.5 * mn), std::cbrt(0.75 * mn),
          static_cast<i128>(m) * m > static_cast<i128>(8) * n};
}

namespace {

void finish(BoundReport& r) {
  lower_with(r.c, r.n, r.ell_lower, r.lower);
  r.finite_lower = finite_two_path_lower_bound(r.m, r.n);
  r.upper = upper_with(r.c, r.n, r.ell_upper);
  r.upper_small_c = small_c_upper(r.c, r.n);
  r.upper_small_c_plus = small_c_upper_plus(r.c, r.n);
  r.upper_large_c = large_with(r.ell_upper, r.n);
  r.prior = reference_prior_bounds(r.m, r.n);
  if (!r.prior.in_regime) r.notes.emplace_back("prior-work formulas evaluated outside their m >> sqrt(n) regime");
  if (r.upper.asymptotic) r.notes.emplace_back("small-c upper bound carries a (1+o(1)) factor");
}

}  // namespace

BoundReport evaluate_bounds(std::int64_t m, std::int64_t n) {
  require_n(n);
  if (m < 1) throw InputError("m must be positive");
  BoundReport r;
  r.m = m;
  r.n = n;
  r.c = static_cast<double>(m) / std::sqrt(static_cast<double>(n));
  r.ell_lower = ell_lower_exact(m, n);
  r.ell_upper = ell_upper_exact(m, n);
  finish(r);
  return r;
}

BoundReport evaluate_bounds(const Rational& c, std::int64_t n) {
  const auto m = fence_height(c, n);
  if (m < 1) throw InputError("c*sqrt(n) < 1: the fence has no rows");
  BoundReport r;
  r.m = m;
  r.n = n;
  r.c = c.value();
  r.ell_lower = ell_lower(r.c, n);
  r.ell_upper = ell_upper(c);
  finish(r);
  return r;
}

}  // namespace burnlab
