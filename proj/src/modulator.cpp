#include "nlmod/modulator.hpp"

#include <cmath>
#include <sstream>

namespace nlmod {

std::string to_string(ModulatorKind kind) {
  switch (kind) {
    case ModulatorKind::identity: return "identity";
    case ModulatorKind::phase: return "phase";
    case ModulatorKind::amplitude: return "amplitude";
    case ModulatorKind::custom: return "custom";
  }
  return "unknown";
}

ModulatorSpec::ModulatorSpec(ModulatorKind kind, double omega_m, double depth,
                             std::vector<cplx> coeffs, double tolerance)
    : kind_(kind), omega_m_(omega_m), depth_(depth), tolerance_(tolerance), coeffs_(std::move(coeffs)) {
  if (!(omega_m_ > 0.0) || !std::isfinite(omega_m_))
    throw ConfigurationError("modulator: omega_m must be positive");
  if (coeffs_.empty() || coeffs_.size() % 2 == 0)
    throw DimensionError("modulator: coefficient list must have odd length (n = -N..N)");

  switch (kind_) {
    case ModulatorKind::identity:
      if (reach() != 0 || coeff(0) != cplx{1.0, 0.0})
        throw ConfigurationError("identity modulator must have the single coefficient c_0 = 1");
      break;
    case ModulatorKind::phase:
      if (std::abs(power() - 1.0) > tolerance_ + 1e-14)
        throw ConfigurationError("phase modulator comb is not lossless within its tolerance");
      break;
    case ModulatorKind::amplitude:
      if (reach() > 1 || coeff(0) != cplx{1.0, 0.0} || coeff(1) != cplx{depth_ / 2.0, 0.0} ||
          coeff(-1) != cplx{depth_ / 2.0, 0.0})
        throw ConfigurationError("amplitude modulator comb must be {delta/2, 1, delta/2}");
      break;
    case ModulatorKind::custom:
      break;
  }
}

int ModulatorSpec::reach() const {
  for (int n = order(); n > 0; --n) {
    if (coeff(n) != cplx{} || coeff(-n) != cplx{}) return n;
  }
  return 0;
}

double ModulatorSpec::power() const {
  double p = 0.0;
  for (const auto& c : coeffs_) p += std::norm(c);
  return p;
}

cplx ModulatorSpec::transmission(double t) const {
  cplx sum{};
  for (int n = -order(); n <= order(); ++n) sum += coeff(n) * std::polar(1.0, -n * omega_m_ * t);
  return sum;
}

ModulatorSpec phase_modulator(double delta, double omega_m, double tol) {
  if (!(std::abs(delta) <= 20.0))
    throw ConfigurationError("phase modulator: |delta| must not exceed 20 rad");
  const int N = truncation_order(std::abs(delta), tol);
  const auto j = bessel_j_orders(N, -delta);
  std::vector<cplx> coeffs(2 * static_cast<std::size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    const double v = j[n];
    coeffs[N + n] = v;
    coeffs[N - n] = (n % 2 == 0) ? v : -v;
  }
  return ModulatorSpec(ModulatorKind::phase, omega_m, delta, std::move(coeffs), tol);
}

ModulatorSpec amplitude_modulator(double delta, double omega_m) {
  if (!(delta > 0.0) || !std::isfinite(delta))
    throw ConfigurationError("amplitude modulator: delta must be positive");
  ModulatorSpec spec(ModulatorKind::amplitude, omega_m, delta, {delta / 2.0, 1.0, delta / 2.0});
  if (delta >= 1.0) {
    std::ostringstream msg;
    msg << "amplitude modulator depth " << delta
        << " >= 1 drives the transmission 1 + delta cos(w t) negative";
    spec.add_warning(msg.str());
  }
  return spec;
}

ModulatorSpec identity_modulator(double omega_m) {
  return ModulatorSpec(ModulatorKind::identity, omega_m, 0.0, {1.0});
}

ModulatorSpec custom_modulator(double omega_m, std::vector<cplx> coeffs) {
  return ModulatorSpec(ModulatorKind::custom, omega_m, 0.0, std::move(coeffs));
}

ModulatorSpec convolve(const ModulatorSpec& first, const ModulatorSpec& second) {
  if (std::abs(first.omega_m() - second.omega_m()) > 1e-12 * first.omega_m())
    throw ConfigurationError("convolve: modulators must share omega_m");
  const int N1 = first.order();
  const int N2 = second.order();
  const int N = N1 + N2;
  std::vector<cplx> out(2 * static_cast<std::size_t>(N) + 1);
  for (int n = -N1; n <= N1; ++n) {
    for (int m = -N2; m <= N2; ++m) out[n + m + N] += first.coeff(n) * second.coeff(m);
  }
  return custom_modulator(first.omega_m(), std::move(out));
}

std::vector<std::string> amplitude_pair_warnings(double delta_s, double delta_i) {
  std::vector<std::string> out;
  if (delta_s * delta_i >= 0.1) {
    std::ostringstream msg;
    msg << "delta_s * delta_i = " << delta_s * delta_i
        << " >= 0.1; the lowest-order coincidence formula assumes delta_s * delta_i << 1";
    out.push_back(msg.str());
  }
  return out;
}

}  // namespace nlmod
