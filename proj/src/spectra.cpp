#include "nlmod/spectra.hpp"

#include <cmath>

namespace nlmod {

FrequencyGrid comb_support_grid(const BiphotonModel& model, const ModulatorSpec& mod) {
  const int reach = mod.reach();
  if (reach == 0) return model.grid();
  const double steps = reach * mod.omega_m() / model.grid().spacing();
  return model.grid().extended(static_cast<std::size_t>(std::ceil(steps - 1e-9)));
}

namespace {

// sign = +1 for the signal (B(w - n wm)), -1 for the idler (C(w + m wm)).
SpectrumResult singles_spectrum(const BiphotonModel& model, const ModulatorSpec& mod, double T,
                                Field field, double sign, Parallelism par) {
  if (!(T > 0.0)) throw ConfigurationError("spectrum: gatewidth T must be positive");
  const FrequencyGrid grid = comb_support_grid(model, mod);

  std::vector<int> orders;
  for (int n = -mod.order(); n <= mod.order(); ++n) {
    if (mod.coeff(n) != cplx{}) orders.push_back(n);
  }

  std::vector<std::vector<double>> terms(orders.size());
  parallel_for(orders.size(), par, [&](std::size_t k) {
    const int n = orders[k];
    const auto shifted = model.sample_shifted(field, sign * n * mod.omega_m(), grid);
    const double weight = std::norm(mod.coeff(n));
    auto& term = terms[k];
    term.resize(grid.size());
    for (std::size_t j = 0; j < grid.size(); ++j) term[j] = weight * std::norm(shifted[j]);
  });

  SpectrumResult out{grid, std::vector<double>(grid.size(), 0.0), T, 0.0};
  for (const auto& term : terms) {
    for (std::size_t j = 0; j < grid.size(); ++j) out.values[j] += term[j];
  }
  const double scale = T / kTwoPi;
  for (auto& v : out.values) v *= scale;
  out.total_counts = integrate(out.values, grid);
  return out;
}

}  // namespace

SpectrumResult signal_spectrum(const BiphotonModel& model, const ModulatorSpec& mod_s, double T,
                               Parallelism par) {
  return singles_spectrum(model, mod_s, T, Field::B, +1.0, par);
}

SpectrumResult idler_spectrum(const BiphotonModel& model, const ModulatorSpec& mod_i, double T,
                              Parallelism par) {
  return singles_spectrum(model, mod_i, T, Field::C, -1.0, par);
}

}  // namespace nlmod
