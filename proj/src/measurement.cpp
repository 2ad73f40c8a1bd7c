#include "nlmod/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nlmod/modulator.hpp"

namespace nlmod {

std::vector<double> MeasurementCurve::mean_subtracted() const {
  const double mean =
      std::accumulate(F_values.begin(), F_values.end(), 0.0) / static_cast<double>(F_values.size());
  std::vector<double> out(F_values);
  for (auto& v : out) v -= mean;
  return out;
}

MeasurementCurve measured_curve(const BiphotonModel& model, double delta_s, double delta_i,
                                double omega_m_max, std::size_t n_samples, Parallelism par) {
  if (!(delta_s > 0.0) || !(delta_i > 0.0))
    throw ConfigurationError("measured_curve: modulation depths must be positive");
  if (!(omega_m_max > 0.0) || n_samples < 2)
    throw ConfigurationError("measured_curve: need omega_m_max > 0 and at least two samples");
  const FrequencyGrid& grid = model.grid();
  if (omega_m_max > grid.half_width())
    throw ConfigurationError("measured_curve: sweep to omega_m_max = " + std::to_string(omega_m_max) +
                             " exceeds the model grid half width " +
                             std::to_string(grid.half_width()));

  MeasurementCurve curve;
  curve.delta_s = delta_s;
  curve.delta_i = delta_i;
  curve.kappa = delta_s * delta_i / kTwoPi;
  curve.warnings = amplitude_pair_warnings(delta_s, delta_i);
  curve.omega_m_values.resize(n_samples);
  curve.F_values.resize(n_samples);
  const double step = omega_m_max / static_cast<double>(n_samples - 1);
  for (std::size_t k = 0; k < n_samples; ++k) curve.omega_m_values[k] = step * static_cast<double>(k);

  const auto phi = wavefunction(model);
  parallel_for(n_samples, par, [&](std::size_t k) {
    const auto ahead = model.sample_shifted(Field::Phi, -curve.omega_m_values[k], grid);
    double overlap = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j)
      overlap += grid.weight(j) * (ahead[j] * std::conj(phi[j])).real();
    curve.F_values[k] = 2.0 * curve.kappa * overlap;
  });
  return curve;
}

namespace {

double sweep_weight(const MeasurementCurve& curve, std::size_t k, SweepWindow window) {
  const std::size_t n = curve.omega_m_values.size();
  double w = curve.spacing();
  if (k == 0 || k + 1 == n) w *= 0.5;
  if (window == SweepWindow::hann) {
    const double x = kPi * curve.omega_m_values[k] / (2.0 * curve.omega_m_values.back());
    w *= std::cos(x) * std::cos(x);
  }
  return w;
}

}  // namespace

double cosine_transform(const MeasurementCurve& curve, double tau, SweepWindow window) {
  double sum = 0.0;
  for (std::size_t k = 0; k < curve.omega_m_values.size(); ++k)
    sum += sweep_weight(curve, k, window) * curve.F_values[k] * std::cos(curve.omega_m_values[k] * tau);
  return sum;
}

RecoveredWaveform recover_waveform(const MeasurementCurve& curve, double tau_max, std::size_t n_tau,
                                   SweepWindow window, Parallelism par) {
  if (curve.omega_m_values.size() < 2)
    throw ConfigurationError("recover_waveform: curve needs at least two samples");
  if (!(tau_max > 0.0) || n_tau < 2)
    throw ConfigurationError("recover_waveform: need tau_max > 0 and at least two tau points");
  const double nyquist = kPi / (2.0 * tau_max);
  if (!(curve.spacing() < nyquist))
    throw ConfigurationError("recover_waveform: sweep spacing " + std::to_string(curve.spacing()) +
                             " must be below pi/(2 tau_max) = " + std::to_string(nyquist));

  RecoveredWaveform out;
  out.tau_values.resize(n_tau);
  out.intensity.resize(n_tau);
  const double step = tau_max / static_cast<double>(n_tau - 1);
  for (std::size_t j = 0; j < n_tau; ++j) out.tau_values[j] = step * static_cast<double>(j);
  parallel_for(n_tau, par, [&](std::size_t j) {
    out.intensity[j] = cosine_transform(curve, out.tau_values[j], window);
  });

  double positive = 0.0;
  double negative = 0.0;
  for (auto& v : out.intensity) {
    if (v < 0.0) {
      negative -= v;
      v = 0.0;
    } else {
      positive += v;
    }
  }
  const double peak = *std::max_element(out.intensity.begin(), out.intensity.end());
  if (!(peak > 0.0)) throw ConfigurationError("recover_waveform: transform has no positive part");
  for (auto& v : out.intensity) v /= peak;
  out.clipped_fraction = negative / positive;
  return out;
}

double RecoveredWaveform::peak_tau() const {
  const auto it = std::max_element(intensity.begin(), intensity.end());
  return tau_values[static_cast<std::size_t>(it - intensity.begin())];
}

std::size_t RecoveredWaveform::samples_across_peak() const {
  const auto peak = static_cast<std::size_t>(
      std::max_element(intensity.begin(), intensity.end()) - intensity.begin());
  std::size_t lo = peak;
  std::size_t hi = peak;
  while (lo > 0 && intensity[lo - 1] >= 0.5) --lo;
  while (hi + 1 < intensity.size() && intensity[hi + 1] >= 0.5) ++hi;
  return hi - lo + 1;
}

}  // namespace nlmod
