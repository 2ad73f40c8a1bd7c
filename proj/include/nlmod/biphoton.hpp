#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlmod/numerics.hpp"

namespace nlmod {

/// Down-converter output coefficients at one signal frequency:
///   a_s(w)        = A a_s(w,0) + B a_i^+(w_i,0)
///   a_i^+(w_i)    = C a_s(w,0) + D a_i^+(w_i,0)
struct Coefficients {
  cplx a{1.0, 0.0};
  cplx b{};
  cplx c{};
  cplx d{1.0, 0.0};
};

/// Closed-form generator for a built-in model, as a function of detuning.
using CoefficientFormula = std::function<Coefficients(double)>;

enum class Field {
  A,
  B,
  C,
  D,
  Phi,  ///< biphoton wavefunction A * conj(C)
};

/// Sampled coefficients of the parametric down-converter in the low-gain
/// limit: |A| = |D| = 1 and B = conj(C) at every sample, with |B| <= 1.
///
/// The model is supported on its grid window; every coefficient except A and
/// D vanishes outside it. Shifted copies of a coefficient are taken by index
/// shift when the shift is a whole number of grid steps, and otherwise from
/// the closed-form formula carried by built-in models.
class BiphotonModel {
 public:
  /// Validates the low-gain invariants; throws ConfigurationError on failure.
  BiphotonModel(FrequencyGrid grid, std::vector<cplx> a, std::vector<cplx> b,
                std::vector<cplx> c, std::vector<cplx> d, std::string label,
                CoefficientFormula formula = {});

  const FrequencyGrid& grid() const { return grid_; }
  const std::string& label() const { return label_; }
  const std::vector<cplx>& a() const { return a_; }
  const std::vector<cplx>& b() const { return b_; }
  const std::vector<cplx>& c() const { return c_; }
  const std::vector<cplx>& d() const { return d_; }
  bool has_formula() const { return static_cast<bool>(formula_); }

  /// X(w - shift) on every point of `target`, zero outside the model window.
  /// Throws ConfigurationError when the shift is not grid-commensurate and
  /// the model has no closed form.
  std::vector<cplx> sample_shifted(Field field, double shift, const FrequencyGrid& target) const;

 private:
  cplx sample(Field field, std::size_t i) const;
  cplx evaluate(Field field, double omega) const;
  std::optional<long long> commensurate_offset(double shift, const FrequencyGrid& target) const;

  FrequencyGrid grid_;
  std::vector<cplx> a_, b_, c_, d_;
  std::string label_;
  CoefficientFormula formula_;
};

/// Rectangular biphoton of unit temporal width centred at `center`:
/// A = D = 1, B = conj(C) = exp(-ix) sin(x)/x with x = (w - center)/2.
BiphotonModel make_rectangular(double center, const FrequencyGrid& grid);

/// Gaussian biphoton with linear spectral phase:
/// conj(C) = B = exp(-w^2 duration^2 / 4) exp(i w delay).
/// The time-domain amplitude is then exp(-(tau - delay)^2 / duration^2).
BiphotonModel make_gaussian_delayed(double duration, double delay, const FrequencyGrid& grid);

/// phi(w) = A(w) conj(C(w)) on the model grid.
std::vector<cplx> wavefunction(const BiphotonModel& model);

/// R = (1/2pi) * integral |B|^2 dw.
double pair_rate(const BiphotonModel& model);

}  // namespace nlmod
