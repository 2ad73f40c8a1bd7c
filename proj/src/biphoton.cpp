#include "nlmod/biphoton.hpp"

#include <cmath>
#include <utility>

namespace nlmod {

namespace {

constexpr double kUnitTolerance = 1e-12;

Coefficients from_biphoton_amplitude(cplx b) {
  Coefficients k;
  k.b = b;
  k.c = std::conj(b);
  return k;
}

std::vector<cplx> sample_field(const FrequencyGrid& grid, const CoefficientFormula& f,
                               cplx Coefficients::*member) {
  std::vector<cplx> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = f(grid.point(i)).*member;
  return out;
}

BiphotonModel build(const FrequencyGrid& grid, std::string label, CoefficientFormula formula) {
  auto a = sample_field(grid, formula, &Coefficients::a);
  auto b = sample_field(grid, formula, &Coefficients::b);
  auto c = sample_field(grid, formula, &Coefficients::c);
  auto d = sample_field(grid, formula, &Coefficients::d);
  return BiphotonModel(grid, std::move(a), std::move(b), std::move(c), std::move(d),
                       std::move(label), std::move(formula));
}

}  // namespace

BiphotonModel::BiphotonModel(FrequencyGrid grid, std::vector<cplx> a, std::vector<cplx> b,
                             std::vector<cplx> c, std::vector<cplx> d, std::string label,
                             CoefficientFormula formula)
    : grid_(grid),
      a_(std::move(a)),
      b_(std::move(b)),
      c_(std::move(c)),
      d_(std::move(d)),
      label_(std::move(label)),
      formula_(std::move(formula)) {
  const std::size_t n = grid_.size();
  if (a_.size() != n || b_.size() != n || c_.size() != n || d_.size() != n)
    throw DimensionError("biphoton model: coefficient lengths must equal the grid size");
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(std::abs(a_[i]) - 1.0) > kUnitTolerance ||
        std::abs(std::abs(d_[i]) - 1.0) > kUnitTolerance)
      throw ConfigurationError("biphoton model: |A| and |D| must be 1 (low-gain limit)");
    if (std::abs(b_[i] - std::conj(c_[i])) > kUnitTolerance)
      throw ConfigurationError("biphoton model: B must equal conj(C)");
    if (std::abs(b_[i]) > 1.0 + kUnitTolerance)
      throw ConfigurationError("biphoton model: |B| must not exceed 1");
  }
}

cplx BiphotonModel::sample(Field field, std::size_t i) const {
  switch (field) {
    case Field::A: return a_[i];
    case Field::B: return b_[i];
    case Field::C: return c_[i];
    case Field::D: return d_[i];
    case Field::Phi: return a_[i] * std::conj(c_[i]);
  }
  return {};
}

cplx BiphotonModel::evaluate(Field field, double omega) const {
  const bool inside = grid_.covers(omega, omega);
  if (!inside) return (field == Field::A || field == Field::D) ? cplx{1.0, 0.0} : cplx{};
  const Coefficients k = formula_(omega);
  switch (field) {
    case Field::A: return k.a;
    case Field::B: return k.b;
    case Field::C: return k.c;
    case Field::D: return k.d;
    case Field::Phi: return k.a * std::conj(k.c);
  }
  return {};
}

std::optional<long long> BiphotonModel::commensurate_offset(double shift,
                                                            const FrequencyGrid& target) const {
  const double h = grid_.spacing();
  if (std::abs(target.spacing() - h) > 1e-12 * h) return std::nullopt;
  const double offset = (target.front() - shift - grid_.front()) / h;
  const double rounded = std::round(offset);
  if (std::abs(offset - rounded) > 1e-6) return std::nullopt;
  return static_cast<long long>(rounded);
}

std::vector<cplx> BiphotonModel::sample_shifted(Field field, double shift,
                                                const FrequencyGrid& target) const {
  const cplx outside = (field == Field::A || field == Field::D) ? cplx{1.0, 0.0} : cplx{};
  std::vector<cplx> out(target.size(), outside);

  if (const auto offset = commensurate_offset(shift, target)) {
    const auto n = static_cast<long long>(grid_.size());
    for (std::size_t j = 0; j < target.size(); ++j) {
      const long long i = *offset + static_cast<long long>(j);
      if (i >= 0 && i < n) out[j] = sample(field, static_cast<std::size_t>(i));
    }
    return out;
  }

  if (!formula_)
    throw ConfigurationError("biphoton model '" + label_ +
                             "': shift is not a whole number of grid steps and the model has no "
                             "closed form to evaluate it");
  for (std::size_t j = 0; j < target.size(); ++j) out[j] = evaluate(field, target.point(j) - shift);
  return out;
}

BiphotonModel make_rectangular(double center, const FrequencyGrid& grid) {
  if (!grid.covers(center - 20.0, center + 20.0))
    throw ConfigurationError("rectangular model: grid must cover center +/- 20 to hold the sinc tails");
  auto formula = [center](double omega) {
    const double x = 0.5 * (omega - center);
    const double sinc = (x == 0.0) ? 1.0 : std::sin(x) / x;
    return from_biphoton_amplitude(std::polar(sinc, -x));
  };
  return build(grid, "rectangular", formula);
}

BiphotonModel make_gaussian_delayed(double duration, double delay, const FrequencyGrid& grid) {
  if (!(duration > 0.0) || !std::isfinite(duration))
    throw ConfigurationError("gaussian model: duration must be positive");
  if (!std::isfinite(delay)) throw ConfigurationError("gaussian model: delay must be finite");
  const double reach = 8.0 / duration;
  if (!grid.covers(-reach, reach))
    throw ConfigurationError("gaussian model: grid must cover +/- 8/duration about zero");
  auto formula = [duration, delay](double omega) {
    const double envelope = std::exp(-omega * omega * duration * duration / 4.0);
    return from_biphoton_amplitude(std::polar(envelope, omega * delay));
  };
  return build(grid, "gaussian", formula);
}

std::vector<cplx> wavefunction(const BiphotonModel& model) {
  std::vector<cplx> phi(model.grid().size());
  for (std::size_t i = 0; i < phi.size(); ++i) phi[i] = model.a()[i] * std::conj(model.c()[i]);
  return phi;
}

double pair_rate(const BiphotonModel& model) {
  std::vector<double> power(model.grid().size());
  for (std::size_t i = 0; i < power.size(); ++i) power[i] = std::norm(model.b()[i]);
  return integrate(power, model.grid()) / kTwoPi;
}

}  // namespace nlmod
