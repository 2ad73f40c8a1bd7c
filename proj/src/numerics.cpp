#include "nlmod/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nlmod {

FrequencyGrid::FrequencyGrid(double center, double half_width, std::size_t n_points) {
  if (!(half_width > 0.0) || !std::isfinite(half_width))
    throw ConfigurationError("frequency grid half width must be positive");
  if (n_points < 3 || n_points % 2 == 0)
    throw ConfigurationError("frequency grid needs an odd point count >= 3, got " +
                             std::to_string(n_points));
  if (!std::isfinite(center)) throw ConfigurationError("frequency grid center must be finite");
  center_ = center;
  n_points_ = n_points;
  spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
}

FrequencyGrid FrequencyGrid::from_spacing(double center, double spacing, std::size_t n_points) {
  if (!(spacing > 0.0) || !std::isfinite(spacing))
    throw ConfigurationError("frequency grid spacing must be positive");
  if (n_points < 3 || n_points % 2 == 0)
    throw ConfigurationError("frequency grid needs an odd point count >= 3, got " +
                             std::to_string(n_points));
  FrequencyGrid g;
  g.center_ = center;
  g.spacing_ = spacing;
  g.n_points_ = n_points;
  return g;
}

std::vector<double> FrequencyGrid::points() const {
  std::vector<double> out(n_points_);
  for (std::size_t i = 0; i < n_points_; ++i) out[i] = point(i);
  return out;
}

std::vector<double> FrequencyGrid::weights() const {
  std::vector<double> w(n_points_, spacing_);
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

FrequencyGrid FrequencyGrid::extended(std::size_t extra) const {
  return from_spacing(center_, spacing_, n_points_ + 2 * extra);
}

bool FrequencyGrid::covers(double lo, double hi) const {
  const double slack = 1e-9 * spacing_;
  return front() <= lo + slack && back() >= hi - slack;
}

namespace {

template <typename T>
T trapezoid(std::span<const T> values, const FrequencyGrid& grid) {
  if (values.size() != grid.size())
    throw DimensionError("integrate: " + std::to_string(values.size()) +
                         " values for a grid of " + std::to_string(grid.size()) + " points");
  T interior{};
  for (std::size_t i = 1; i + 1 < values.size(); ++i) interior += values[i];
  const T ends = 0.5 * (values.front() + values.back());
  return grid.spacing() * (interior + ends);
}

void check_bessel_range(int n, double x) {
  if (std::abs(n) > kMaxBesselOrder || !(std::abs(x) <= kMaxBesselArgument))
    throw RangeError("bessel_j(" + std::to_string(n) + ", " + std::to_string(x) +
                     ") is outside the validated range |n| <= 200, |x| <= 50");
}

}  // namespace

double integrate(std::span<const double> values, const FrequencyGrid& grid) {
  return trapezoid(values, grid);
}

cplx integrate(std::span<const cplx> values, const FrequencyGrid& grid) {
  return trapezoid(values, grid);
}

// Miller's backward recurrence J_{k-1} = (2k/x) J_k - J_{k+1}, started well
// above both the requested order and the argument so the minimal solution
// dominates. The unnormalized sequence is scaled by the identity
// J_0^2 + 2 sum_k J_k^2 = 1 (all terms positive); the sign comes from
// J_0 + 2 sum_k J_2k = 1.
std::vector<double> bessel_j_orders(int max_order, double x) {
  if (max_order < 0) throw RangeError("bessel_j_orders: negative maximum order");
  check_bessel_range(max_order, x);

  std::vector<double> out(static_cast<std::size_t>(max_order) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }

  const double ax = std::abs(x);
  const int top = std::max(max_order, static_cast<int>(std::ceil(ax)));
  const int start = 2 * ((top + 16 + static_cast<int>(std::sqrt(40.0 * top))) / 2);

  constexpr double kRescaleAbove = 1e150;
  std::vector<double> seq(static_cast<std::size_t>(start) + 2, 0.0);
  seq[start] = 1e-30;
  for (int k = start; k >= 1; --k) {
    seq[k - 1] = (2.0 * k / ax) * seq[k] - seq[k + 1];
    if (std::abs(seq[k - 1]) > kRescaleAbove) {
      for (int j = k - 1; j <= start; ++j) seq[j] /= kRescaleAbove;
    }
  }

  double sum_sq = 0.0;
  double even_sum = 0.0;
  for (int k = start; k >= 1; --k) {
    sum_sq += 2.0 * seq[k] * seq[k];
    if (k % 2 == 0) even_sum += 2.0 * seq[k];
  }
  sum_sq += seq[0] * seq[0];
  even_sum += seq[0];
  const double scale = std::copysign(std::sqrt(sum_sq), even_sum);

  for (int k = 0; k <= max_order; ++k) {
    double v = seq[k] / scale;
    if (x < 0.0 && (k % 2 != 0)) v = -v;
    out[k] = v;
  }
  return out;
}

double bessel_j(int n, double x) {
  check_bessel_range(n, x);
  const int order = std::abs(n);
  const double value = bessel_j_orders(order, x)[order];
  return (n < 0 && (order % 2 != 0)) ? -value : value;
}

int truncation_order(double delta, double tol) {
  if (!(delta >= 0.0)) throw ConfigurationError("truncation_order: delta must be >= 0");
  if (!(tol > 0.0 && tol < 1.0)) throw ConfigurationError("truncation_order: tol must lie in (0, 1)");
  if (delta == 0.0) return 1;

  const auto j = bessel_j_orders(kMaxBesselOrder, delta);
  // tail[n] = 2 * sum_{k > n} J_k^2, accumulated from the smallest terms up.
  std::vector<double> tail(j.size(), 0.0);
  for (std::size_t k = j.size() - 1; k-- > 0;) tail[k] = tail[k + 1] + 2.0 * j[k + 1] * j[k + 1];

  for (int n = 1; n <= kMaxBesselOrder; ++n) {
    if (tail[n] <= tol) return n;
  }
  throw RangeError("truncation_order: tolerance not reachable within order 200");
}

}  // namespace nlmod
