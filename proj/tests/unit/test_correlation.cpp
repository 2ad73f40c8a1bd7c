#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "nlmod/correlation.hpp"
#include "nlmod/spectra.hpp"
#include "oracles.hpp"

using namespace nlmod;

namespace {

const FrequencyGrid kGrid(0.0, 200.0, 16001);

const BiphotonModel& rect() {
  static const BiphotonModel m = make_rectangular(0.0, kGrid);
  return m;
}

double slow_limit_distance(double omega_m) {
  const auto comb = quantum_comb(rect(), phase_modulator(2.0, omega_m), phase_modulator(2.0, omega_m));
  double l1 = 0.0;
  for (int z = -comb.z_max; z <= comb.z_max; ++z)
    l1 += std::abs(comb.normalized(z) - std::pow(oracle::bessel_series(std::abs(z), 4.0), 2));
  return l1;
}

// Rectangular model: C(w) is the transform of a unit box in time, so
//   integral C(w - n wm) conj(C(w - n' wm)) dw = 2 pi e^{-i k wm / 2} sinc(k wm / 2),
// k = n - n'. With real comb amplitudes only the real part sin(k wm)/(k wm) survives.
double gram_prediction(const ModulatorSpec& s, const ModulatorSpec& i, int z) {
  const double wm = s.omega_m();
  double total = 0.0;
  for (int n = -s.order(); n <= s.order(); ++n) {
    const double an = (std::conj(s.coeff(n)) * std::conj(i.coeff(z - n))).real();
    for (int n2 = -s.order(); n2 <= s.order(); ++n2) {
      const double an2 = (std::conj(s.coeff(n2)) * std::conj(i.coeff(z - n2))).real();
      const double k = static_cast<double>(n - n2) * wm;
      total += an * an2 * (k == 0.0 ? 1.0 : std::sin(k) / k);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("unmodulated comb has a single line holding all pairs") {
  const auto comb = quantum_comb(rect(), identity_modulator(1.0), identity_modulator(1.0));
  CHECK(comb.z_max == 0);
  CHECK(std::abs(comb.weight(0) - kTwoPi) < 1e-2 * kTwoPi);
  CHECK(comb.weight(0) == doctest::Approx(kTwoPi * pair_rate(rect())).epsilon(1e-12));
  CHECK(comb.weight(3) == 0.0);
}

TEST_CASE("slow modulation approaches the coherent Bessel comb") {
  const auto fast = quantum_comb(rect(), phase_modulator(2.0, 0.1), phase_modulator(2.0, 0.1));
  const auto slow = quantum_comb(rect(), phase_modulator(2.0, 0.03), phase_modulator(2.0, 0.03));
  double worst_fast = 0.0, worst_slow = 0.0;
  for (int z = -12; z <= 12; ++z) {
    const double target = std::pow(oracle::bessel_series(std::abs(z), 4.0), 2);
    worst_fast = std::max(worst_fast, std::abs(fast.normalized(z) - target));
    worst_slow = std::max(worst_slow, std::abs(slow.normalized(z) - target));
  }
  CHECK(worst_fast <= 0.02);
  CHECK(worst_slow < worst_fast);
}

TEST_CASE("opposite slow modulations cancel to the central line") {
  for (double wm : {0.1, 0.03}) {
    const auto comb = quantum_comb(rect(), phase_modulator(2.0, wm), phase_modulator(-2.0, wm));
    double off = 0.0;
    for (int z = -comb.z_max; z <= comb.z_max; ++z)
      if (z != 0) off += comb.weight(z);
    CHECK(off / comb.total() <= 0.05);
    CHECK(comb.normalized(0) > 0.95);
  }
}

TEST_CASE("L1 distance to the coherent comb shrinks as the modulation slows") {
  double previous = slow_limit_distance(1.0);
  for (double wm : {0.3, 0.1, 0.03}) {
    const double d = slow_limit_distance(wm);
    CHECK(d < previous);
    previous = d;
  }
}

TEST_CASE("comb matches the box-overlap Gram matrix") {
  for (auto [ds, di, wm] : {std::tuple{2.0, 2.0, 10.0}, std::tuple{2.0, -2.0, 10.0},
                            std::tuple{2.0, 2.0, 1.0}, std::tuple{4.0, 1.0, 0.5}}) {
    const auto s = phase_modulator(ds, wm);
    const auto i = phase_modulator(di, wm);
    const auto comb = quantum_comb(rect(), s, i);
    for (int z = -comb.z_max; z <= comb.z_max; ++z)
      CHECK(std::abs(comb.normalized(z) - gram_prediction(s, i, z)) < 5e-3);
  }
}

TEST_CASE("equal modulation depths give a symmetric comb") {
  for (double wm : {0.1, 10.0}) {
    const auto comb = quantum_comb(rect(), phase_modulator(2.0, wm), phase_modulator(2.0, wm));
    for (int z = 1; z <= comb.z_max; ++z) CHECK(std::abs(comb.weight(z) - comb.weight(-z)) < 1e-10);
  }
}

TEST_CASE("swapping signal and idler depths keeps the line strengths") {
  const double wm = 0.5;
  const auto ab = quantum_comb(rect(), phase_modulator(3.0, wm), phase_modulator(1.0, wm));
  const auto ba = quantum_comb(rect(), phase_modulator(1.0, wm), phase_modulator(3.0, wm));
  auto wa = ab.weights, wb = ba.weights;
  std::sort(wa.begin(), wa.end());
  std::sort(wb.begin(), wb.end());
  REQUIRE(wa.size() == wb.size());
  for (std::size_t k = 0; k < wa.size(); ++k) CHECK(std::abs(wa[k] - wb[k]) < 1e-8);
}

TEST_CASE("comb is independent of the thread count") {
  const auto s = phase_modulator(2.0, 0.1), i = phase_modulator(-1.0, 0.1);
  CHECK(quantum_comb(rect(), s, i, 1.0, {1}).weights == quantum_comb(rect(), s, i, 1.0, {3}).weights);
  CHECK(classical_curve(rect(), s, i, 1.0, std::nullopt, {1}).values ==
        classical_curve(rect(), s, i, 1.0, std::nullopt, {3}).values);
}

TEST_CASE("mismatched modulation frequencies are rejected") {
  CHECK_THROWS_AS(quantum_comb(rect(), phase_modulator(1.0, 0.1), phase_modulator(1.0, 0.2)),
                  ConfigurationError);
  CHECK(shared_omega_m(identity_modulator(1.0), phase_modulator(1.0, 0.2)) == 0.2);
  CHECK(shared_omega_m(phase_modulator(0.0, 5.0), phase_modulator(1.0, 0.2)) == 0.2);
}

TEST_CASE("unmodulated classical curve is the sinc^2 autocorrelation") {
  const auto c = classical_curve(rect(), identity_modulator(1.0), identity_modulator(1.0));
  const std::size_t zero = c.delta_grid.size() / 2;
  REQUIRE(c.delta_grid.point(zero) == 0.0);
  // integral sinc^4(w/2) dw = 4 pi / 3
  CHECK(c.values[zero] == doctest::Approx(1.0 / (3.0 * kPi)).epsilon(1e-4));
  CHECK(*std::max_element(c.values.begin(), c.values.end()) == c.values[zero]);
  for (std::size_t k = 0; k < c.values.size(); ++k) {
    CHECK(c.values[k] >= 0.0);
    CHECK(c.values[k] == doctest::Approx(c.values[c.values.size() - 1 - k]).epsilon(1e-12));
  }
}

TEST_CASE("classical curve equals the lag-kernel double sum") {
  // c(D) = (T/2pi)^2 sum_{n,m} |q_n|^2 |r_m|^2 K(D + (n + m) wm),
  // K(x) = integral |B(w)|^2 |C(w + x)|^2 dw on the model window.
  const double wm = 1.0;  // 40 grid steps
  const auto s = phase_modulator(2.0, wm), i = phase_modulator(-1.0, wm);
  const auto c = classical_curve(rect(), s, i, 2.0);
  const auto& g = kGrid;
  const long steps = std::lround(wm / g.spacing());
  std::vector<double> mag2(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) mag2[k] = std::norm(rect().b()[k]);
  const auto kernel = [&](long shift) {
    double acc = 0.0;
    for (std::size_t k = 0; k < g.size(); ++k) {
      const long j = static_cast<long>(k) + shift;
      if (j < 0 || j >= static_cast<long>(g.size())) continue;
      const double w = (k == 0 || k + 1 == g.size()) ? 0.5 : 1.0;
      acc += w * mag2[k] * mag2[static_cast<std::size_t>(j)];
    }
    return acc * g.spacing();
  };
  for (double delta : {-7.0, -1.0, 0.0, 0.5, 3.0, 12.0}) {
    const long d = std::lround(delta / g.spacing());
    double expected = 0.0;
    for (int n = -s.order(); n <= s.order(); ++n)
      for (int m = -i.order(); m <= i.order(); ++m)
        expected += std::norm(s.coeff(n)) * std::norm(i.coeff(m)) * kernel(d + (n + m) * steps);
    expected *= std::pow(2.0 / kTwoPi, 2);
    const std::size_t idx = static_cast<std::size_t>(
        std::lround((delta - c.delta_grid.front()) / c.delta_grid.spacing()));
    CHECK(c.values[idx] == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("classical curve lags must be whole grid steps") {
  const auto m = identity_modulator(1.0);
  CHECK_THROWS_AS(classical_curve(rect(), m, m, 1.0, FrequencyGrid(0.0, 1.0, 7)), ConfigurationError);
  CHECK_NOTHROW(classical_curve(rect(), m, m, 1.0, FrequencyGrid(0.0, 1.0, 41)));
}

TEST_CASE("sum rules hold for ideal phase modulators") {
  const double R = pair_rate(rect());
  for (double wm : {0.1, 10.0}) {
    for (auto [ds, di] : {std::pair{0.0, 0.0}, std::pair{2.0, 2.0}, std::pair{2.0, -2.0}}) {
      const auto s = phase_modulator(ds, wm), i = phase_modulator(di, wm);
      const auto report = sum_rules(quantum_comb(rect(), s, i), classical_curve(rect(), s, i), rect());
      CHECK(report.R == R);
      CHECK(std::abs(report.quantum_deviation) <= 1e-6);
      CHECK(std::abs(report.classical_deviation) <= 1e-4);
      CHECK_FALSE(report.single_pair_regime);
    }
  }
}

TEST_CASE("sum rules scale with the gatewidth and flag the single-pair regime") {
  const auto s = phase_modulator(1.0, 2.0), i = phase_modulator(1.0, 2.0);
  const double T = 0.05;
  const auto report = sum_rules(quantum_comb(rect(), s, i, T), classical_curve(rect(), s, i, T), rect());
  CHECK(report.T == T);
  CHECK(report.quantum_sum == doctest::Approx(report.R * T).epsilon(1e-6));
  CHECK(report.classical_integral == doctest::Approx(std::pow(report.R * T, 2)).epsilon(1e-4));
  CHECK(report.single_pair_regime);
}
