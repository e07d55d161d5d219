#pragma once

#include <optional>

namespace bifloquet {

inline constexpr double kPi = 3.14159265358979323846;

/// Physical parameters of a bichromatically driven two-level system
///
///   H(t) = -(w_q/2) sz + d(t)/2 sx,
///   d(t) = Omega cos(nu) cos(N1 w t) + Omega sin(nu) cos(N2 w t) + b.
///
/// All energies share the scale of w_q (conventionally 1).
struct DriveConfig {
  double w_q = 1.0;
  double b = 0.0;
  double big_omega = 0.0;
  double nu = 0.0;
  int n1 = 1;
  int n2 = 1;
  double omega = 1.0;

  /// Builds a drive from the two tone amplitudes Omega_1 = Omega cos(nu) and
  /// Omega_2 = Omega sin(nu).
  static DriveConfig from_tone_amplitudes(double w_q, double b, double tone1,
                                          double tone2, int n1, int n2,
                                          double omega);

  // cos(nu) and sin(nu) with values below 1e-14 snapped to exactly zero, so
  // that nu = pi/2 switches the first tone off completely.
  double cos_nu() const;
  double sin_nu() const;

  double tone1_amplitude() const { return big_omega * cos_nu(); }
  double tone2_amplitude() const { return big_omega * sin_nu(); }
  bool tone1_active() const { return tone1_amplitude() != 0.0; }
  bool tone2_active() const { return tone2_amplitude() != 0.0; }

  /// d(t)
  double signal(double t) const;
  double period() const { return 2.0 * kPi / omega; }

  /// Throws InvalidArgument on any violated invariant.
  void validate() const;
};

/// Cutoffs of the extended Floquet space. Harmonics run over
/// [-n_max, n_max]; Fourier weights are kept for |k| <= k_max.
struct TruncationConfig {
  int n_max = 20;
  int k_max = 4;

  int dim() const { return 2 * (2 * n_max + 1); }
  void validate(const DriveConfig& drive) const;
};

TruncationConfig default_truncation(const DriveConfig& drive);

/// Optional overrides applied on top of default_truncation(), resolved per
/// parameter point.
struct TruncationPolicy {
  std::optional<int> n_max;
  std::optional<int> k_max;

  TruncationConfig resolve(const DriveConfig& drive) const;
};

}  // namespace bifloquet
