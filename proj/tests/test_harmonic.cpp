#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "harmlike/harmonic.hpp"

using namespace harmlike;

namespace {

// Independent oracle: the literal sum a^{n-p}/p with powers built by
// repeated multiplication, no Horner, no recurrence.
Rational brute_force_sum(const Rational& a, unsigned n) {
  Rational sum = 0;
  for (unsigned p = 1; p <= n; ++p) {
    Rational power = 1;
    for (unsigned j = 0; j < n - p; ++j) power *= a;
    sum += power / Rational(p);
  }
  return sum;
}

const Rational kHalf(1, 2);

}  // namespace

TEST_CASE("harmonic_like_direct matches frozen values") {
  CHECK(harmonic_like_direct({3.7, -2.2}, 1) == Complex(1.0, 0.0));
  CHECK(harmonic_like_direct({1.0, 0.0}, 4).real() ==
        doctest::Approx(25.0 / 12.0).epsilon(1e-15));
  CHECK(harmonic_like_direct({0.5, 0.0}, 4).real() ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(harmonic_like_direct({0.0, 0.0}, 5).real() ==
        doctest::Approx(0.2).epsilon(1e-15));
  CHECK(harmonic_like_direct({2.0, 0.0}, 0) == Complex(0.0, 0.0));
}

TEST_CASE("harmonic_like_direct rejects non-finite a") {
  CHECK_THROWS_AS(harmonic_like_direct({std::nan(""), 0.0}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(harmonic_like_direct({0.0, INFINITY}, 3),
                  std::invalid_argument);
}

TEST_CASE("harmonic_like_sequence matches frozen values") {
  auto half = harmonic_like_sequence({0.5, 0.0}, 3);
  REQUIRE(half.size() == 3);
  CHECK(half[0].real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(half[1].real() == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(half[2].real() == doctest::Approx(5.0 / 6.0).epsilon(1e-15));

  auto ones = harmonic_like_sequence({1.0, 0.0}, 3);
  CHECK(ones[1].real() == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(ones[2].real() == doctest::Approx(11.0 / 6.0).epsilon(1e-15));

  auto zeros = harmonic_like_sequence({0.0, 0.0}, 3);
  CHECK(zeros[0].real() == doctest::Approx(1.0));
  CHECK(zeros[1].real() == doctest::Approx(0.5));
  CHECK(zeros[2].real() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("harmonic_like_exact matches the brute-force sum") {
  CHECK(harmonic_like_exact(kHalf, 4) == Rational(2, 3));
  CHECK(harmonic_like_exact(Rational(1), 5) == Rational(137, 60));
  CHECK(harmonic_like_exact(Rational(2), 3) == Rational(16, 3));

  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  for (int trial = 0; trial < 30; ++trial) {
    const Rational a(num(rng), den(rng));
    const unsigned n = trial % 12;
    CHECK(harmonic_like_exact(a, n) == brute_force_sum(a, n));
  }
}

TEST_CASE("exact recurrence H_n = a*H_{n-1} + 1/n") {
  for (const Rational& a :
       {Rational(0), kHalf, Rational(1), Rational(2), Rational(-1, 3)}) {
    Rational prev = 0;
    for (unsigned n = 1; n <= 50; ++n) {
      const Rational h = harmonic_like_exact(a, n);
      CHECK(h == a * prev + Rational(1, n));
      prev = h;
    }
  }
}

TEST_CASE("a = 1 reproduces the classical harmonic numbers") {
  Rational classical = 0;
  for (unsigned n = 1; n <= 30; ++n) {
    classical += Rational(1, n);
    CHECK(harmonic_like_exact(Rational(1), n) == classical);
  }
}

TEST_CASE("H_1(a) = 1 exactly for random complex a") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  for (int i = 0; i < 200; ++i) {
    const Complex a{coord(rng), coord(rng)};
    CHECK(harmonic_like_direct(a, 1) == Complex(1.0, 0.0));
  }
}

TEST_CASE("direct and recurrence methods agree within round-off") {
  std::mt19937 rng(42);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    Complex a{coord(rng), coord(rng)};
    if (std::abs(a) > 2.0) a /= std::abs(a) / 2.0;
    const unsigned n_max = 40;
    const auto seq = harmonic_like_sequence(a, n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
      double term_scale = 0.0;
      double apow = 1.0;
      for (unsigned p = n; p >= 1; --p) {
        term_scale = std::max(term_scale, apow / p);
        apow *= std::abs(a);
      }
      const double bound = 1e-13 * (1.0 + term_scale);
      CHECK(std::abs(harmonic_like_direct(a, n) - seq[n - 1]) <= bound);
    }
  }
}

TEST_CASE("harmonic_half matches frozen values and the direct sum") {
  CHECK(harmonic_half(0) == 0.0);
  CHECK(harmonic_half(2) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(harmonic_half(4) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  for (unsigned n : {1u, 3u, 7u, 20u, 100u}) {
    CHECK(harmonic_half(n) ==
          doctest::Approx(harmonic_like_direct({0.5, 0.0}, n).real())
              .epsilon(1e-14));
  }
}

TEST_CASE("harmonic_half is stable for large n") {
  // n*H_n(1/2) -> 2; the gap must shrink monotonically.
  double prev_gap = INFINITY;
  for (unsigned n : {1000u, 10000u, 100000u}) {
    const double h = harmonic_half(n);
    CHECK(std::isfinite(h));
    CHECK(h > 0.0);
    const double gap = std::abs(n * h - 2.0);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("harmonic_like_integral matches frozen values") {
  CHECK(harmonic_like_integral(1.0, 3, 4) ==
        doctest::Approx(11.0 / 6.0).epsilon(1e-13));
  CHECK(harmonic_like_integral(0.5, 3, 4) ==
        doctest::Approx(5.0 / 6.0).epsilon(1e-13));
  CHECK(harmonic_like_integral(0.0, 2, 3) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("harmonic_like_integral rejects too few nodes and non-finite a") {
  CHECK_THROWS_AS(harmonic_like_integral(1.0, 10, 5), std::invalid_argument);
  CHECK_THROWS_AS(harmonic_like_integral(std::nan(""), 3, 4), std::invalid_argument);
  CHECK_NOTHROW(harmonic_like_integral(1.0, 10, 6));
}

TEST_CASE("quadrature agrees with the direct sum, singularity included") {
  for (double a : {0.1, 0.25, 0.5, 0.9, 1.0, 1.5, 2.0}) {
    for (unsigned n = 1; n <= 20; ++n) {
      const double direct = harmonic_like_direct({a, 0.0}, n).real();
      const double quad = harmonic_like_integral(a, n, (n + 1) / 2 + 2);
      CHECK(std::abs(quad - direct) <= 1e-10 * (1.0 + std::abs(direct)));
    }
  }
}

TEST_CASE("harmonic_half_integral_exact equals the exact sum at a = 1/2") {
  CHECK(harmonic_half_integral_exact(1) == Rational(1));
  CHECK(harmonic_half_integral_exact(3) == Rational(5, 6));
  CHECK(harmonic_half_integral_exact(4) == Rational(2, 3));
  CHECK_THROWS_AS(harmonic_half_integral_exact(0), std::invalid_argument);
  for (unsigned n = 1; n <= 30; ++n) {
    CHECK(harmonic_half_integral_exact(n) == harmonic_like_exact(kHalf, n));
  }
}
