#pragma once

#include <string>
#include <vector>

#include "nlmod/numerics.hpp"

namespace nlmod {

enum class ModulatorKind { identity, phase, amplitude, custom };

std::string to_string(ModulatorKind kind);

inline constexpr double kDefaultTruncationTolerance = 1e-10;

/// Periodic modulator as a finite Fourier comb: the time-domain transmission
/// is sum_n c_n exp(-i n omega_m t), stored densely for n = -N..N.
class ModulatorSpec {
 public:
  ModulatorSpec(ModulatorKind kind, double omega_m, double depth, std::vector<cplx> coeffs,
                double tolerance = 0.0);

  ModulatorKind kind() const { return kind_; }
  double omega_m() const { return omega_m_; }
  double depth() const { return depth_; }
  double tolerance() const { return tolerance_; }

  /// N such that coefficients are stored for n = -N..N.
  int order() const { return static_cast<int>(coeffs_.size() / 2); }

  /// Largest |n| with a nonzero coefficient (0 for an identity comb).
  int reach() const;

  /// c_n, zero outside the stored range.
  cplx coeff(int n) const {
    const int N = order();
    return (n < -N || n > N) ? cplx{} : coeffs_[static_cast<std::size_t>(n + N)];
  }
  const std::vector<cplx>& coeffs() const { return coeffs_; }

  /// Sum of |c_n|^2.
  double power() const;

  /// Time-domain transmission sum_n c_n exp(-i n omega_m t).
  cplx transmission(double t) const;

  /// Non-fatal conditions noticed at construction.
  const std::vector<std::string>& warnings() const { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  ModulatorKind kind_;
  double omega_m_;
  double depth_;
  double tolerance_;
  std::vector<cplx> coeffs_;
  std::vector<std::string> warnings_;
};

/// Ideal phase modulator exp[i delta sin(omega_m t)]: c_n = J_n(-delta) for
/// |n| <= truncation_order(|delta|, tol).
ModulatorSpec phase_modulator(double delta, double omega_m, double tol = kDefaultTruncationTolerance);

/// Amplitude modulator 1 + delta cos(omega_m t): {delta/2, 1, delta/2}.
ModulatorSpec amplitude_modulator(double delta, double omega_m);

ModulatorSpec identity_modulator(double omega_m);

/// User-supplied comb; `coeffs` holds n = -N..N and must have odd length.
ModulatorSpec custom_modulator(double omega_m, std::vector<cplx> coeffs);

/// Comb of two modulators applied in series at the same omega_m (product of
/// transmissions, i.e. discrete convolution of coefficients).
ModulatorSpec convolve(const ModulatorSpec& first, const ModulatorSpec& second);

/// Warnings for a synchronously driven amplitude-modulator pair whose
/// depth product leaves the delta_s * delta_i << 1 regime.
std::vector<std::string> amplitude_pair_warnings(double delta_s, double delta_i);

}  // namespace nlmod
