#pragma once

#include <optional>
#include <vector>

#include "nlmod/biphoton.hpp"
#include "nlmod/modulator.hpp"
#include "nlmod/parallel.hpp"

namespace nlmod {

/// Quantum part of the two-frequency correlation: a comb of delta functions
///   q(Delta) = (T/2pi) sum_z f(z) delta(Delta + z omega_m),
/// so weight f(z) sits at Delta = -z omega_m.
struct SidebandComb {
  double omega_m = 1.0;
  int z_max = 0;
  std::vector<double> weights;  ///< f(z) for z = -z_max..z_max
  double gatewidth = 1.0;
  double pair_rate = 0.0;  ///< R of the model the comb was computed from

  double weight(int z) const {
    return (z < -z_max || z > z_max) ? 0.0 : weights[static_cast<std::size_t>(z + z_max)];
  }
  /// f(z) / (2 pi R); sums to one for lossless modulators.
  double normalized(int z) const { return weight(z) / (kTwoPi * pair_rate); }
  double total() const;
};

/// Classical (continuum) part c(Delta) of the two-frequency correlation.
struct ClassicalCurve {
  FrequencyGrid delta_grid;
  std::vector<double> values;
  double gatewidth = 1.0;
};

struct SumRuleReport {
  double quantum_sum = 0.0;         ///< (T/2pi) sum_z f(z), expected R T
  double classical_integral = 0.0;  ///< integral c(Delta) dDelta, expected (R T)^2
  double R = 0.0;
  double T = 0.0;
  double quantum_deviation = 0.0;    ///< quantum_sum / (R T) - 1
  double classical_deviation = 0.0;  ///< classical_integral / (R T)^2 - 1
  /// R T < 0.1: at most one pair per gate, where the comb is observable.
  bool single_pair_regime = false;
};

/// Modulation frequency shared by a modulator pair. A comb with no sidebands
/// is compatible with any frequency. Throws ConfigurationError when both
/// combs have sidebands at different frequencies.
double shared_omega_m(const ModulatorSpec& mod_s, const ModulatorSpec& mod_i);

/// f(z) = integral | sum_n conj(q_n) conj(r_{z-n}) C(w - n wm) conj(A(w - n wm)) |^2 dw
SidebandComb quantum_comb(const BiphotonModel& model, const ModulatorSpec& mod_s,
                          const ModulatorSpec& mod_i, double T = 1.0, Parallelism par = {});

/// Lag axis covering the full support of c(Delta) at the model grid spacing.
FrequencyGrid default_delta_grid(const BiphotonModel& model, const ModulatorSpec& mod_s,
                                 const ModulatorSpec& mod_i);

/// c(Delta) as the correlation of the two singles spectra,
///   c(Delta) = integral S(w) I(w + Delta) dw.
/// Every lag must be a whole number of model grid steps. When `delta_grid` is
/// empty the default lag axis is used.
ClassicalCurve classical_curve(const BiphotonModel& model, const ModulatorSpec& mod_s,
                               const ModulatorSpec& mod_i, double T = 1.0,
                               std::optional<FrequencyGrid> delta_grid = std::nullopt,
                               Parallelism par = {});

SumRuleReport sum_rules(const SidebandComb& comb, const ClassicalCurve& curve,
                        const BiphotonModel& model);

}  // namespace nlmod
