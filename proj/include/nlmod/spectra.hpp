#pragma once

#include <vector>

#include "nlmod/biphoton.hpp"
#include "nlmod/modulator.hpp"
#include "nlmod/parallel.hpp"

namespace nlmod {

/// Singles spectrum after a modulator, in counts per unit bandwidth per
/// gatewidth T, on a detuning axis.
struct SpectrumResult {
  FrequencyGrid grid;
  std::vector<double> values;
  double gatewidth = 1.0;
  double total_counts = 0.0;  ///< integrate(values, grid)
};

/// Model grid extended on both sides so that every copy of the model
/// shifted by n * omega_m, |n| <= reach, lies inside it.
FrequencyGrid comb_support_grid(const BiphotonModel& model, const ModulatorSpec& mod);

/// S(w) = (T/2pi) sum_n |q_n|^2 |B(w - n omega_m)|^2
SpectrumResult signal_spectrum(const BiphotonModel& model, const ModulatorSpec& mod_s,
                               double T = 1.0, Parallelism par = {});

/// I(w) = (T/2pi) sum_m |r_m|^2 |C(w + m omega_m)|^2
SpectrumResult idler_spectrum(const BiphotonModel& model, const ModulatorSpec& mod_i,
                              double T = 1.0, Parallelism par = {});

}  // namespace nlmod
