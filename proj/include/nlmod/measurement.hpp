#pragma once

#include <string>
#include <vector>

#include "nlmod/biphoton.hpp"
#include "nlmod/parallel.hpp"

namespace nlmod {

/// Coincidence rate of the synchronized amplitude-modulator measurement as a
/// function of modulation frequency (quantum term, lowest order in kappa).
/// F is even in omega_m, so only omega_m >= 0 is stored.
struct MeasurementCurve {
  std::vector<double> omega_m_values;  ///< uniform on [0, omega_m_max]
  std::vector<double> F_values;        ///< raw, not mean-subtracted
  double kappa = 0.0;                  ///< delta_s delta_i / 2pi
  double delta_s = 0.0;
  double delta_i = 0.0;
  std::vector<std::string> warnings;

  double spacing() const { return omega_m_values[1] - omega_m_values[0]; }
  /// F with its sweep average removed, the form in which the curve is plotted.
  std::vector<double> mean_subtracted() const;
};

/// F(w_m) = kappa * integral [phi(w + w_m) conj(phi(w)) + cc] dw sampled at
/// n_samples uniform points on [0, omega_m_max].
MeasurementCurve measured_curve(const BiphotonModel& model, double delta_s, double delta_i,
                                double omega_m_max, std::size_t n_samples, Parallelism par = {});

enum class SweepWindow { none, hann };

struct RecoveredWaveform {
  std::vector<double> tau_values;  ///< uniform on [0, tau_max]
  std::vector<double> intensity;   ///< clipped at zero, peak 1
  /// Negative mass removed by clipping, relative to the positive mass.
  double clipped_fraction = 0.0;

  double peak_tau() const;
  /// Samples at or above half maximum around the peak.
  std::size_t samples_across_peak() const;
};

/// Discrete cosine transform sum_k w_k F(w_k) cos(w_k tau) of the curve,
/// with trapezoidal weights over the sweep.
double cosine_transform(const MeasurementCurve& curve, double tau,
                        SweepWindow window = SweepWindow::none);

/// |phi~(tau)|^2 recovered from the curve by inverse cosine transform on
/// n_tau points of [0, tau_max]. Requires a sweep spacing below
/// pi / (2 tau_max).
RecoveredWaveform recover_waveform(const MeasurementCurve& curve, double tau_max,
                                   std::size_t n_tau, SweepWindow window = SweepWindow::none,
                                   Parallelism par = {});

}  // namespace nlmod
