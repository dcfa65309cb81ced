#include <doctest.h>

#include <cmath>

#include "burnlab/bounds.hpp"
#include "burnlab/errors.hpp"

using namespace burnlab;

TEST_CASE("rationals parse exactly") {
  CHECK(Rational::parse("1").p == 1);
  const auto half = Rational::parse("0.5");
  CHECK(half.p == 1);
  CHECK(half.q == 2);
  const auto r = Rational::parse("6/4");
  CHECK(r.p == 3);
  CHECK(r.q == 2);
  CHECK(r.to_string() == "3/2");
  for (const char* bad : {"", "0", "-1", "1/0", "abc", "1.2.3", "1/", "/2"}) CHECK_THROWS_AS(Rational::parse(bad), InputError);
}

TEST_CASE("fence height is floor(c sqrt n) in exact arithmetic") {
  CHECK(fence_height({1, 1}, 10000) == 100);
  CHECK(fence_height({1, 2}, 16) == 2);
  CHECK(fence_height({1, 1}, 99) == 9);
  CHECK(fence_height({2, 1}, 1000000) == 2000);
  CHECK(fence_height({3, 2}, 100) == 15);
  CHECK(fence_height({1, 3}, 4) == 0);
}

TEST_CASE("ell_lower examples") {
  CHECK(ell_lower(2.0, 1000000) == 2);
  CHECK(ell_lower(10.0, 1000000) == 5);
  CHECK(ell_lower(2.0, 4).value() >= 1);
  CHECK_FALSE(ell_lower(0.5, 1).has_value());
  // exact variant: (k-1)^2 k n <= (m-1)^2
  CHECK(ell_lower_exact(2000, 1000000) == 2);
  CHECK(ell_lower_exact(10000, 1000000) == 5);
  CHECK(ell_lower_exact(1, 7) == 1);
  for (std::int64_t m = 1; m <= 60; ++m)
    for (std::int64_t n = 1; n <= 40; ++n) {
      const auto k = ell_lower_exact(m, n);
      CHECK((k - 1) * (k - 1) * k * n <= (m - 1) * (m - 1));
      CHECK(k * k * (k + 1) * n > (m - 1) * (m - 1));
    }
}

TEST_CASE("ell_upper examples and the exact cube bracket") {
  CHECK(ell_upper(2.0) == 1);
  CHECK(ell_upper(1.0) == 1);
  CHECK(ell_upper(16.0) == 4);
  CHECK(ell_upper(Rational{16, 1}) == 4);
  CHECK(ell_upper(Rational{33, 2}) == 5);
  // k^3 >= (c/2)^2 > (k-1)^3  <=>  4 q^2 k^3 >= p^2 > 4 q^2 (k-1)^3
  for (std::int64_t p = 1; p <= 60; ++p)
    for (std::int64_t q = 1; q <= 12; ++q) {
      const auto k = ell_upper(Rational{p, q});
      CHECK(4 * q * q * k * k * k >= p * p);
      CHECK(p * p > 4 * q * q * (k - 1) * (k - 1) * (k - 1));
      CHECK(ell_upper(static_cast<double>(p) / static_cast<double>(q)) == k);
    }
  CHECK(ell_upper_exact(16000, 1000000) == 4);
  CHECK(ell_upper_exact(2000, 1000000) == 1);
}

TEST_CASE("lower bound branches") {
  const auto small = lower_bound(1.0, 10000);
  CHECK(small.value == doctest::Approx(136.6025).epsilon(1e-6));
  CHECK(small.branch == BoundBranch::SmallC);
  CHECK(small.asymptotic);

  const auto edge = lower_bound(2.0, 1000000);
  CHECK(edge.branch == BoundBranch::LargeC);
  CHECK_FALSE(edge.asymptotic);
  CHECK(edge.value == doctest::Approx(std::sqrt(2.0 * 1e6)));
  // the small-c formula at c = 2 degenerates to sqrt(n)
  CHECK(lower_bound(1.999999, 1000000).value == doctest::Approx(1000.0).epsilon(1e-3));

  const auto big = lower_bound(4.0, 1000000);
  CHECK(big.value == doctest::Approx(std::sqrt(static_cast<double>(*ell_lower(4.0, 1000000)) * 1e6)));
}

TEST_CASE("upper bound picks the smaller applicable branch") {
  const auto u = upper_bound(1.0, 10000);
  CHECK(u.branch == BoundBranch::SmallC);
  CHECK(u.value == doctest::Approx(100.0 * (2.0 + std::sqrt(15.0)) / 4.0));
  CHECK(large_c_upper(1.0, 10000) == doctest::Approx(200.0));
  CHECK(large_c_upper(2.0, 1000000) == doctest::Approx(2000.0));
  CHECK_FALSE(small_c_upper(3.0, 100).has_value());
  CHECK(upper_bound(3.0, 1000000).branch == BoundBranch::LargeC);
  CHECK(*small_c_upper_plus(1.0, 10000) > *small_c_upper(1.0, 10000));
}

TEST_CASE("two-path capacity closed form matches direct summation") {
  for (std::int64_t m = 1; m <= 30; ++m)
    for (std::int64_t n = 1; n <= 500; ++n) {
      std::int64_t b = 0, covered = 0;
      const std::int64_t need = m == 1 ? n : 2 * n;
      while (covered < need) covered += two_path_capacity(m, b++);
      REQUIRE(finite_two_path_lower_bound(m, n) == b);
    }
}

TEST_CASE("two-path capacity is the best a single ball can do") {
  for (std::int64_t m = 2; m <= 8; ++m)
    for (std::int64_t t = 0; t <= 10; ++t) {
      // rows long enough that the ends never clip
      std::int64_t best = 0;
      for (std::int64_t row = 1; row <= m; ++row) {
        const auto top = std::max<std::int64_t>(0, 2 * (t - (row - 1)) + 1);
        const auto bottom = std::max<std::int64_t>(0, 2 * (t - (m - row)) + 1);
        best = std::max(best, top + bottom);
      }
      CHECK(two_path_capacity(m, t) == best);
    }
}

TEST_CASE("finite lower bound examples") {
  CHECK(finite_two_path_lower_bound(10, 100) == 14);
  CHECK(finite_two_path_lower_bound(1, 16) == 4);
  CHECK(finite_two_path_lower_bound(1, 17) == 5);
  // tall grids: the count alone gives ceil(sqrt(2n))
  CHECK(finite_two_path_lower_bound(50, 100) == 15);
  CHECK(finite_two_path_lower_bound(10, 100) >= static_cast<std::int64_t>(std::ceil(1.3660 * 10)));
}

TEST_CASE("finite lower bound stays below exact values from an independent ILP") {
  // b(G_{m,n}) for n = 1..20, computed once with tests/oracle/ilp_oracle.py
  const std::int64_t exact[4][20] = {
      {1, 2, 2, 2, 3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5},
      {2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 5},
      {2, 3, 3, 3, 4, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6},
      {2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6},
  };
  const std::int64_t m4[20] = {2, 2, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6};
  for (std::int64_t m = 1; m <= 4; ++m)
    for (std::int64_t n = 1; n <= 20; ++n) CHECK(finite_two_path_lower_bound(m, n) <= exact[m - 1][n - 1]);
  for (std::int64_t n = 1; n <= 20; ++n) CHECK(finite_two_path_lower_bound(4, n) == m4[n - 1]);
  // G_{4,16}: the counting bound is already tight
  CHECK(finite_two_path_lower_bound(4, 16) == 6);
}

TEST_CASE("finite lower bound converges to the asymptotic constant") {
  for (double c : {0.5, 1.0, 1.5}) {
    const std::int64_t n = std::int64_t{1} << 26;
    const auto m = static_cast<std::int64_t>(std::floor(c * std::sqrt(static_cast<double>(n))));
    const double ratio = static_cast<double>(finite_two_path_lower_bound(m, n)) / std::sqrt(static_cast<double>(n));
    CHECK(ratio == doctest::Approx(c / 2 + std::sqrt(1 - c * c / 4)).epsilon(0.01));
  }
}

TEST_CASE("lower bound never exceeds upper bound on a dense c grid") {
  for (std::int64_t n : {10000, 1000000, 100000000})
    for (int i = 1; i <= 283; ++i) {
      const double c = i / 100.0;
      CHECK(lower_bound(c, n).value <= upper_bound(c, n).value);
    }
}

TEST_CASE("prior-work reference formulas") {
  const auto p = reference_prior_bounds(100, 10000);
  CHECK(p.cartesian == doctest::Approx(114.4714).epsilon(1e-5));
  CHECK(p.strong_product == doctest::Approx(std::cbrt(0.75e6)));
  CHECK_FALSE(p.in_regime);
  CHECK(reference_prior_bounds(1, 100).cartesian < 10.0);
  CHECK_FALSE(reference_prior_bounds(1, 100).in_regime);
  CHECK(reference_prior_bounds(1000, 1000).in_regime);
  CHECK(reference_prior_bounds(50, 50).cartesian == doctest::Approx(std::cbrt(1.5 * 2500)));
}

TEST_CASE("bound reports carry the m actually used") {
  const auto r = evaluate_bounds(Rational{1, 1}, 10000);
  CHECK(r.m == 100);
  CHECK(r.lower.value == doctest::Approx(136.6025).epsilon(1e-6));
  CHECK(r.upper.value == doctest::Approx(146.8246).epsilon(1e-6));
  CHECK(r.finite_lower == 137);
  CHECK(r.ell_upper == 1);
  CHECK(r.prior.cartesian == doctest::Approx(114.4714).epsilon(1e-6));
  CHECK_FALSE(r.notes.empty());

  const auto same = evaluate_bounds(100, 10000);
  CHECK(same.lower.value == doctest::Approx(r.lower.value));
  CHECK(same.upper.value == doctest::Approx(r.upper.value));

  CHECK_THROWS_AS(evaluate_bounds(Rational{1, 3}, 4), InputError);
  CHECK_THROWS_AS(evaluate_bounds(0, 4), InputError);
  CHECK_THROWS_AS(lower_bound(0.0, 4), InputError);
}
