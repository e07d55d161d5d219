#include "bifloquet/drive.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bifloquet/error.hpp"

namespace bifloquet {

namespace {

constexpr double kSnap = 1e-14;
constexpr double kAngleSlack = 1e-12;

double snapped(double v) { return std::abs(v) < kSnap ? 0.0 : v; }

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidArgument(std::string("drive parameter ") + name +
                          " is not finite");
  }
}

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Numerical: return "numerical failure";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::Tracking: return "mode tracking failure";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::PerturbativeRegime: return "outside perturbative regime";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Parse: return "parse error";
  }
  return "unknown error";
}

DriveConfig DriveConfig::from_tone_amplitudes(double w_q, double b,
                                              double tone1, double tone2,
                                              int n1, int n2, double omega) {
  if (tone1 < 0.0 || tone2 < 0.0) {
    throw InvalidArgument("tone amplitudes must be non-negative");
  }
  DriveConfig d;
  d.w_q = w_q;
  d.b = b;
  d.big_omega = std::hypot(tone1, tone2);
  d.nu = (tone1 == 0.0 && tone2 == 0.0) ? 0.0 : std::atan2(tone2, tone1);
  d.n1 = n1;
  d.n2 = n2;
  d.omega = omega;
  return d;
}

double DriveConfig::cos_nu() const { return snapped(std::cos(nu)); }
double DriveConfig::sin_nu() const { return snapped(std::sin(nu)); }

double DriveConfig::signal(double t) const {
  return tone1_amplitude() * std::cos(n1 * omega * t) +
         tone2_amplitude() * std::cos(n2 * omega * t) + b;
}

void DriveConfig::validate() const {
  require_finite(w_q, "w_q");
  require_finite(b, "b");
  require_finite(big_omega, "Omega");
  require_finite(nu, "nu");
  require_finite(omega, "omega");
  if (w_q <= 0.0) throw InvalidArgument("w_q must be positive");
  if (omega <= 0.0) throw InvalidArgument("omega must be positive");
  if (big_omega < 0.0) throw InvalidArgument("Omega must be non-negative");
  if (nu < -kAngleSlack || nu > kPi / 2 + kAngleSlack) {
    throw InvalidArgument("mixing angle nu must lie in [0, pi/2]");
  }
  if (n1 < 1 || n2 < 1) {
    throw InvalidArgument("harmonics N1 and N2 must be positive integers");
  }
  if (n1 == n2 && tone1_active() && tone2_active()) {
    throw InvalidArgument(
        "N1 == N2 is only allowed when one of the tones is switched off");
  }
}

void TruncationConfig::validate(const DriveConfig& drive) const {
  const int n_big = std::max(drive.n1, drive.n2);
  if (n_max < n_big + 1) {
    throw InvalidArgument("n_max = " + std::to_string(n_max) +
                          " is below max(N1, N2) + 1 = " +
                          std::to_string(n_big + 1));
  }
  if (k_max < 0) throw InvalidArgument("k_max must be non-negative");
  if (k_max > 2 * n_max) {
    throw InvalidArgument("k_max = " + std::to_string(k_max) +
                          " exceeds 2 * n_max = " + std::to_string(2 * n_max));
  }
}

TruncationConfig default_truncation(const DriveConfig& drive) {
  const int n_big = std::max(drive.n1, drive.n2);
  const double spread =
      4.0 * (drive.big_omega + std::abs(drive.b) + drive.w_q) / drive.omega;
  TruncationConfig t;
  t.n_max = std::max(20, static_cast<int>(std::ceil(spread)) + n_big + 10);
  t.k_max = std::min(4 * n_big, 2 * t.n_max);
  return t;
}

TruncationConfig TruncationPolicy::resolve(const DriveConfig& drive) const {
  TruncationConfig t = default_truncation(drive);
  if (n_max) t.n_max = *n_max;
  if (k_max) t.k_max = *k_max;
  return t;
}

}  // namespace bifloquet
