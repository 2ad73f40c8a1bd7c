#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "nlmod/errors.hpp"

namespace nlmod {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Uniform sampling of detuning from the band center.
///
/// All frequencies are dimensionless, in units where the unmodulated
/// biphoton bandwidth is one. The point count is odd so that the center is
/// always a sample. Grids are stored by spacing rather than half width so
/// that a grid and its extensions share sample positions bit for bit.
class FrequencyGrid {
 public:
  FrequencyGrid(double center, double half_width, std::size_t n_points);

  static FrequencyGrid from_spacing(double center, double spacing,
                                    std::size_t n_points);

  double center() const { return center_; }
  double spacing() const { return spacing_; }
  std::size_t size() const { return n_points_; }
  double half_width() const { return spacing_ * static_cast<double>(mid()); }
  double front() const { return point(0); }
  double back() const { return point(n_points_ - 1); }

  double point(std::size_t i) const {
    return center_ + (static_cast<double>(i) - static_cast<double>(mid())) * spacing_;
  }
  std::vector<double> points() const;

  /// Trapezoidal weights; they sum to 2 * half_width.
  std::vector<double> weights() const;
  double weight(std::size_t i) const {
    return (i == 0 || i + 1 == n_points_) ? 0.5 * spacing_ : spacing_;
  }

  /// Same center and spacing with `extra` more samples on each side.
  FrequencyGrid extended(std::size_t extra) const;

  /// True when [lo, hi] lies inside the sampled window.
  bool covers(double lo, double hi) const;

  friend bool operator==(const FrequencyGrid&, const FrequencyGrid&) = default;

 private:
  FrequencyGrid() = default;
  std::size_t mid() const { return (n_points_ - 1) / 2; }

  double center_ = 0.0;
  double spacing_ = 1.0;
  std::size_t n_points_ = 3;
};

/// Trapezoidal quadrature of sampled values over the grid.
double integrate(std::span<const double> values, const FrequencyGrid& grid);
cplx integrate(std::span<const cplx> values, const FrequencyGrid& grid);

/// Bessel function of the first kind of integer order.
/// Validated for |n| <= 200 and |x| <= 50; outside that a RangeError is thrown.
double bessel_j(int n, double x);

/// J_0(x) ... J_max_order(x) from a single backward recurrence.
std::vector<double> bessel_j_orders(int max_order, double x);

/// Smallest N >= 1 with sum_{|n|<=N} J_n(delta)^2 >= 1 - tol.
int truncation_order(double delta, double tol);

inline constexpr int kMaxBesselOrder = 200;
inline constexpr double kMaxBesselArgument = 50.0;

}  // namespace nlmod
