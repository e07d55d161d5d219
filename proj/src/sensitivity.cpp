#include "bifloquet/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bifloquet/error.hpp"

namespace bifloquet {

namespace {

constexpr double kMinTrackingOverlap = 0.5;

void require_step(double h, const char* what) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw InvalidArgument(std::string(what) + ": step must be positive");
  }
}

}  // namespace

double tracked_raw_gap(const DriveConfig& drive, const TruncationConfig& trunc,
                       const FloquetSpectrum& reference) {
  const FloquetSpectrum spec = solve_floquet(drive, trunc, &reference);
  if (spec.tracking_overlap < kMinTrackingOverlap) {
    std::ostringstream os;
    os << "mode tracking lost: overlap " << spec.tracking_overlap
       << " < 0.5 at b = " << drive.b << ", Omega = " << drive.big_omega;
    throw TrackingError(os.str(), spec.tracking_overlap);
  }
  return spec.raw_gap();
}

double gap_sensitivity_bias(const DriveConfig& drive, const TruncationConfig& trunc,
                            double h, const FloquetSpectrum* center) {
  require_step(h, "gap_sensitivity_bias");
  FloquetSpectrum cold;
  if (center == nullptr) {
    cold = solve_floquet(drive, trunc);
    center = &cold;
  }
  DriveConfig up = drive;
  DriveConfig down = drive;
  up.b += h;
  down.b -= h;
  return (tracked_raw_gap(up, trunc, *center) - tracked_raw_gap(down, trunc, *center)) /
         (2.0 * h);
}

AmplitudeSensitivity gap_sensitivity_amplitude(const DriveConfig& drive,
                                               const TruncationConfig& trunc,
                                               double h,
                                               const FloquetSpectrum* center) {
  require_step(h, "gap_sensitivity_amplitude");
  FloquetSpectrum cold;
  if (center == nullptr) {
    cold = solve_floquet(drive, trunc);
    center = &cold;
  }
  auto at = [&](double amplitude) {
    DriveConfig d = drive;
    d.big_omega = amplitude;
    return tracked_raw_gap(d, trunc, *center);
  };

  AmplitudeSensitivity s;
  if (drive.big_omega >= h) {
    s.value = (at(drive.big_omega + h) - at(drive.big_omega - h)) / (2.0 * h);
  } else {
    // At Omega = 0 with N1 == N2 the second tone must stay off; keep nu.
    s.one_sided = true;
    const double f0 = center->raw_gap();
    s.value = (-3.0 * f0 + 4.0 * at(drive.big_omega + h) - at(drive.big_omega + 2.0 * h)) /
              (2.0 * h);
  }
  return s;
}

SensitivityResult gap_sensitivities(const DriveConfig& drive,
                                    const TruncationConfig& trunc,
                                    const FloquetSpectrum& center, double h_b,
                                    double h_omega) {
  SensitivityResult r;
  r.method = SensitivityMethod::FiniteDifference;
  r.step = h_b;
  r.d_gap_d_b = gap_sensitivity_bias(drive, trunc, h_b, &center);
  const AmplitudeSensitivity a = gap_sensitivity_amplitude(drive, trunc, h_omega, &center);
  r.d_gap_d_omega_amp = a.value;
  r.one_sided = a.one_sided;
  return r;
}

std::string WeightIdentityReport::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << "FD dgap/db = " << finite_difference << ", g0 = " << g0
     << ", residual = " << residual << " (tolerance " << tolerance << ")"
     << (passed ? "" : " VIOLATED");
  return os.str();
}

WeightIdentityReport verify_weight_identity(const DriveConfig& drive,
                                            const TruncationConfig& trunc,
                                            double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("verify_weight_identity: tol must be positive");
  const FloquetSpectrum center = solve_floquet(drive, trunc);
  WeightIdentityReport r;
  r.finite_difference = gap_sensitivity_bias(drive, trunc, kDefaultBiasStep, &center);
  r.g0 = fourier_weights(center, 0)[0];
  r.residual = std::abs(r.finite_difference - r.g0);
  r.tolerance = tol * std::max(1.0, std::abs(r.g0));
  r.passed = r.residual <= r.tolerance;
  return r;
}

}  // namespace bifloquet
