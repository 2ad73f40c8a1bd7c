#include <cmath>
#include <vector>

#include "doctest.h"
#include "nlmod/numerics.hpp"
#include "oracles.hpp"

using namespace nlmod;

TEST_CASE("frequency grid spacing and weights") {
  const FrequencyGrid g(0.5, 3.0, 13);
  CHECK(g.spacing() == doctest::Approx(0.5));
  CHECK(g.point(6) == 0.5);
  CHECK(g.front() == doctest::Approx(-2.5));
  CHECK(g.back() == doctest::Approx(3.5));
  double total = 0.0;
  for (double w : g.weights()) total += w;
  CHECK(total == doctest::Approx(6.0));

  const auto wide = g.extended(4);
  CHECK(wide.size() == 21);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(wide.point(i + 4) == g.point(i));

  CHECK_THROWS_AS(FrequencyGrid(0.0, 1.0, 10), ConfigurationError);
  CHECK_THROWS_AS(FrequencyGrid(0.0, 1.0, 1), ConfigurationError);
  CHECK_THROWS_AS(FrequencyGrid(0.0, -1.0, 11), ConfigurationError);
}

TEST_CASE("bessel_j special values") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(1, 0.0) == 0.0);
  CHECK(bessel_j(-7, 0.0) == 0.0);
  // Frozen from the long-double power series: J_0(2) = 0.22389077914123567
  CHECK(std::abs(oracle::bessel_series(0, 2.0) - 0.22389077914123567) < 1e-16);
  CHECK(std::abs(bessel_j(0, 2.0) - 0.223891) < 1e-6);
  CHECK(std::abs(bessel_j(0, 2.0) - oracle::bessel_series(0, 2.0)) < 1e-15);
}

TEST_CASE("bessel_j agrees with the power series for moderate arguments") {
  for (int n = 0; n <= 30; ++n) {
    for (double x : {0.01, 0.5, 1.0, 2.0, 4.0, 7.5, 10.0}) {
      CHECK(std::abs(bessel_j(n, x) - oracle::bessel_series(n, x)) < 1e-14);
    }
  }
}

TEST_CASE("bessel_j agrees with std::cyl_bessel_j over the validated range") {
  double worst = 0.0;
  for (int n = 0; n <= 200; n += 7) {
    for (double x = 0.25; x <= 50.0; x += 1.75) {
      worst = std::max(worst, std::abs(bessel_j(n, x) - std::cyl_bessel_j(double(n), x)));
    }
  }
  CHECK(worst < 1e-13);
}

TEST_CASE("bessel_j parity relations") {
  for (int n = -12; n <= 12; ++n) {
    for (double x : {0.3, 2.0, 13.7, 49.0}) {
      const double sign = (n % 2 == 0) ? 1.0 : -1.0;
      CHECK(bessel_j(-n, x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-13));
      CHECK(bessel_j(n, -x) == doctest::Approx(sign * bessel_j(n, x)).epsilon(1e-13));
    }
  }
}

TEST_CASE("bessel_j rejects arguments outside the validated range") {
  CHECK_THROWS_AS(bessel_j(201, 1.0), RangeError);
  CHECK_THROWS_AS(bessel_j(-201, 1.0), RangeError);
  CHECK_THROWS_AS(bessel_j(0, 50.5), RangeError);
  CHECK_THROWS_AS(bessel_j(0, std::nan("")), RangeError);
  CHECK_NOTHROW(bessel_j(200, -50.0));
}

TEST_CASE("bessel_j_orders matches single evaluations") {
  const auto seq = bessel_j_orders(40, -3.3);
  REQUIRE(seq.size() == 41);
  for (int n = 0; n <= 40; ++n) CHECK(std::abs(seq[n] - bessel_j(n, -3.3)) < 1e-15);
}

TEST_CASE("integrate trapezoid examples") {
  const FrequencyGrid g(0.0, 1.0, 101);
  std::vector<double> ones(g.size(), 1.0);
  CHECK(integrate(ones, g) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(std::abs(integrate(g.points(), g)) < 1e-14);

  std::vector<cplx> ramp(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) ramp[i] = cplx(1.0, g.point(i));
  const cplx z = integrate(std::span<const cplx>(ramp), g);
  CHECK(z.real() == doctest::Approx(2.0));
  CHECK(std::abs(z.imag()) < 1e-14);

  std::vector<double> short_values(7, 1.0);
  CHECK_THROWS_AS(integrate(short_values, g), DimensionError);
}

TEST_CASE("integrate sinc squared to 2 pi on a wide grid") {
  const FrequencyGrid g(3.0, 200.0, 8001);
  std::vector<double> v(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = 0.5 * (g.point(i) - 3.0);
    v[i] = x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, 2);
  }
  // The window misses a tail of about 4/200; the tolerance is relative,
  // matching R = 1 +/- 1e-2 for the same integrand.
  CHECK(std::abs(integrate(v, g) / kTwoPi - 1.0) < 1e-2);
}

TEST_CASE("trapezoid error shrinks at least twofold when the point count doubles") {
  auto sinc2 = [](double w) {
    const double x = 0.5 * w;
    return x == 0.0 ? 1.0 : std::pow(std::sin(x) / x, 2);
  };
  const double half_width = 20.0;
  const double exact = oracle::simpson(sinc2, -half_width, half_width, 2'000'000);
  double previous = 0.0;
  for (std::size_t n : {21u, 41u, 81u, 161u}) {
    const FrequencyGrid g(0.0, half_width, n);
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) v[i] = sinc2(g.point(i));
    const double err = std::abs(integrate(v, g) - exact);
    if (previous > 0.0) CHECK(err <= previous / 2.0);
    previous = err;
  }
}

TEST_CASE("truncation_order examples") {
  CHECK(truncation_order(0.0, 1e-12) == 1);

  const int n2 = truncation_order(2.0, 1e-10);
  double captured = 0.0;
  for (int n = -n2; n <= n2; ++n) captured += std::pow(oracle::bessel_series(std::abs(n), 2.0), 2);
  CHECK(captured >= 1.0 - 1e-10);
  double short_by_one = 0.0;
  for (int n = -(n2 - 1); n <= n2 - 1; ++n)
    short_by_one += std::pow(oracle::bessel_series(std::abs(n), 2.0), 2);
  CHECK(short_by_one < 1.0 - 1e-10);

  CHECK(truncation_order(4.0, 1e-10) >= n2);
  CHECK_THROWS_AS(truncation_order(-1.0, 1e-10), ConfigurationError);
  CHECK_THROWS_AS(truncation_order(1.0, 0.0), ConfigurationError);
  CHECK_THROWS_AS(truncation_order(1.0, 1.0), ConfigurationError);
}

TEST_CASE("truncation_order is monotone in delta") {
  int last = 0;
  for (double d = 0.0; d <= 20.0; d += 0.25) {
    const int n = truncation_order(d, 1e-10);
    CHECK(n >= last);
    last = n;
  }
}

TEST_CASE("Bessel normalization sum J_n^2 = 1") {
  for (double delta : {0.5, 2.0, 4.0}) {
    const int N = truncation_order(delta, 1e-12);
    double sum = 0.0;
    for (int n = -N; n <= N; ++n) sum += bessel_j(n, delta) * bessel_j(n, delta);
    CHECK(std::abs(sum - 1.0) < 1e-10);
  }
}

// Terms are dropped only when both factors lie outside their truncated
// combs, so the neglected products are of order the power tolerance.
TEST_CASE("Bessel addition theorem sum_n J_n(a) J_{z-n}(b) = J_z(a+b)") {
  for (double a : {-2.0, 2.0}) {
    for (double b : {-2.0, 2.0}) {
      const int Na = truncation_order(std::abs(a), 1e-12);
      const int Nb = truncation_order(std::abs(b), 1e-12);
      for (int z = 0; z <= 8; ++z) {
        double sum = 0.0;
        for (int n = std::min(-Na, z - Nb); n <= std::max(Na, z + Nb); ++n)
          sum += bessel_j(n, a) * bessel_j(z - n, b);
        CHECK(std::abs(sum - bessel_j(z, a + b)) < 1e-8);
      }
    }
  }
}
