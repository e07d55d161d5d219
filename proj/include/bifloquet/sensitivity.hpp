#pragma once

#include <string>

#include "bifloquet/drive.hpp"
#include "bifloquet/floquet.hpp"

namespace bifloquet {

inline constexpr double kDefaultBiasStep = 1e-6;
inline constexpr double kDefaultAmplitudeStep = 1e-5;

enum class SensitivityMethod { FiniteDifference, WeightIdentity };

struct SensitivityResult {
  double d_gap_d_b = 0.0;
  double d_gap_d_omega_amp = 0.0;
  SensitivityMethod method = SensitivityMethod::FiniteDifference;
  double step = 0.0;
  bool one_sided = false;  // amplitude derivative taken forward from Omega
};

/// Raw gap at `drive`, with modes tracked from `reference`. Throws
/// TrackingError when the best overlap drops below 0.5.
double tracked_raw_gap(const DriveConfig& drive, const TruncationConfig& trunc,
                       const FloquetSpectrum& reference);

/// Central difference of the gap in b. `center` (if given) must be the cold
/// solution at `drive`.
double gap_sensitivity_bias(const DriveConfig& drive, const TruncationConfig& trunc,
                            double h = kDefaultBiasStep,
                            const FloquetSpectrum* center = nullptr);

struct AmplitudeSensitivity {
  double value = 0.0;
  bool one_sided = false;
};

/// Central difference in Omega; when Omega < h, the second-order forward
/// stencil on {Omega, Omega + h, Omega + 2h} is used and flagged.
AmplitudeSensitivity gap_sensitivity_amplitude(const DriveConfig& drive,
                                               const TruncationConfig& trunc,
                                               double h = kDefaultAmplitudeStep,
                                               const FloquetSpectrum* center = nullptr);

/// Both finite-difference sensitivities around one centre solve.
SensitivityResult gap_sensitivities(const DriveConfig& drive,
                                    const TruncationConfig& trunc,
                                    const FloquetSpectrum& center,
                                    double h_b = kDefaultBiasStep,
                                    double h_omega = kDefaultAmplitudeStep);

struct WeightIdentityReport {
  double finite_difference = 0.0;
  double g0 = 0.0;
  double residual = 0.0;  // |FD - g0|
  double tolerance = 0.0; // tol * max(1, |g0|)
  bool passed = false;

  std::string describe() const;
};

/// Checks d(gap)/db == g_0 at one parameter point.
WeightIdentityReport verify_weight_identity(const DriveConfig& drive,
                                            const TruncationConfig& trunc,
                                            double tol);

}  // namespace bifloquet
