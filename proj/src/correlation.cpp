#include "nlmod/correlation.hpp"

#include <cmath>

#include "nlmod/spectra.hpp"

namespace nlmod {

double SidebandComb::total() const {
  double sum = 0.0;
  for (double w : weights) sum += w;
  return sum;
}

double shared_omega_m(const ModulatorSpec& mod_s, const ModulatorSpec& mod_i) {
  if (mod_s.reach() == 0) return mod_i.omega_m();
  if (mod_i.reach() == 0) return mod_s.omega_m();
  const double ws = mod_s.omega_m();
  const double wi = mod_i.omega_m();
  if (std::abs(ws - wi) > 1e-12 * std::max(ws, wi))
    throw ConfigurationError("signal and idler modulators must be driven at the same omega_m");
  return ws;
}

SidebandComb quantum_comb(const BiphotonModel& model, const ModulatorSpec& mod_s,
                          const ModulatorSpec& mod_i, double T, Parallelism par) {
  if (!(T > 0.0)) throw ConfigurationError("quantum_comb: gatewidth T must be positive");
  const double wm = shared_omega_m(mod_s, mod_i);
  const FrequencyGrid grid = comb_support_grid(model, mod_s);

  // C(w - n wm) conj(A(w - n wm)) = conj(phi(w - n wm)) for each nonzero q_n.
  std::vector<int> orders;
  for (int n = -mod_s.order(); n <= mod_s.order(); ++n) {
    if (mod_s.coeff(n) != cplx{}) orders.push_back(n);
  }
  std::vector<std::vector<cplx>> shifted(orders.size());
  parallel_for(orders.size(), par, [&](std::size_t k) {
    auto g = model.sample_shifted(Field::Phi, orders[k] * wm, grid);
    for (auto& v : g) v = std::conj(v);
    shifted[k] = std::move(g);
  });

  SidebandComb comb;
  comb.omega_m = wm;
  comb.z_max = mod_s.order() + mod_i.order();
  comb.gatewidth = T;
  comb.pair_rate = pair_rate(model);
  comb.weights.assign(2 * static_cast<std::size_t>(comb.z_max) + 1, 0.0);

  parallel_for(comb.weights.size(), par, [&](std::size_t idx) {
    const int z = static_cast<int>(idx) - comb.z_max;
    std::vector<cplx> amplitude(grid.size());
    bool any = false;
    for (std::size_t k = 0; k < orders.size(); ++k) {
      const int n = orders[k];
      const cplx a = std::conj(mod_s.coeff(n)) * std::conj(mod_i.coeff(z - n));
      if (a == cplx{}) continue;
      any = true;
      const auto& g = shifted[k];
      for (std::size_t j = 0; j < grid.size(); ++j) amplitude[j] += a * g[j];
    }
    if (!any) return;
    double f = 0.0;
    for (std::size_t j = 0; j < grid.size(); ++j) f += grid.weight(j) * std::norm(amplitude[j]);
    comb.weights[idx] = f;
  });
  return comb;
}

FrequencyGrid default_delta_grid(const BiphotonModel& model, const ModulatorSpec& mod_s,
                                 const ModulatorSpec& mod_i) {
  shared_omega_m(mod_s, mod_i);
  const FrequencyGrid gs = comb_support_grid(model, mod_s);
  const FrequencyGrid gi = comb_support_grid(model, mod_i);
  const std::size_t lags = (gs.size() - 1) / 2 + (gi.size() - 1) / 2;
  return FrequencyGrid::from_spacing(0.0, model.grid().spacing(), 2 * lags + 1);
}

ClassicalCurve classical_curve(const BiphotonModel& model, const ModulatorSpec& mod_s,
                               const ModulatorSpec& mod_i, double T,
                               std::optional<FrequencyGrid> delta_grid, Parallelism par) {
  shared_omega_m(mod_s, mod_i);
  const FrequencyGrid lags = delta_grid ? *delta_grid : default_delta_grid(model, mod_s, mod_i);
  const double h = model.grid().spacing();

  std::vector<long long> offsets(lags.size());
  for (std::size_t j = 0; j < lags.size(); ++j) {
    const double steps = lags.point(j) / h;
    const double rounded = std::round(steps);
    if (std::abs(steps - rounded) > 1e-6)
      throw ConfigurationError("classical_curve: every lag must be a whole number of grid steps (" +
                               std::to_string(h) + ")");
    offsets[j] = static_cast<long long>(rounded);
  }

  const SpectrumResult s = signal_spectrum(model, mod_s, T, par);
  const SpectrumResult i = idler_spectrum(model, mod_i, T, par);
  const auto mid_s = static_cast<long long>((s.grid.size() - 1) / 2);
  const auto mid_i = static_cast<long long>((i.grid.size() - 1) / 2);
  const auto n_s = static_cast<long long>(s.grid.size());
  const auto n_i = static_cast<long long>(i.grid.size());

  ClassicalCurve curve{lags, std::vector<double>(lags.size(), 0.0), T};
  parallel_for(lags.size(), par, [&](std::size_t j) {
    // I index paired with S index a: a - mid_s + mid_i + offset.
    const long long shift = mid_i - mid_s + offsets[j];
    const long long lo = std::max(0LL, -shift);
    const long long hi = std::min(n_s, n_i - shift);
    double sum = 0.0;
    for (long long a = lo; a < hi; ++a)
      sum += s.grid.weight(static_cast<std::size_t>(a)) * s.values[a] * i.values[a + shift];
    curve.values[j] = sum;
  });
  return curve;
}

SumRuleReport sum_rules(const SidebandComb& comb, const ClassicalCurve& curve,
                        const BiphotonModel& model) {
  SumRuleReport r;
  r.T = comb.gatewidth;
  r.R = pair_rate(model);
  r.quantum_sum = comb.gatewidth / kTwoPi * comb.total();
  r.classical_integral = integrate(curve.values, curve.delta_grid);
  const double rt = r.R * r.T;
  r.quantum_deviation = r.quantum_sum / rt - 1.0;
  r.classical_deviation = r.classical_integral / (rt * rt) - 1.0;
  r.single_pair_regime = rt < 0.1;
  return r;
}

}  // namespace nlmod
