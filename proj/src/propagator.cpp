#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include <Eigen/Dense>

#include "bifloquet/error.hpp"
#include "bifloquet/floquet.hpp"

namespace bifloquet {

namespace {

using Cplx = std::complex<double>;

// H(t) = a(t) . sigma with a = (d(t)/2, 0, -w_q/2).
Eigen::Vector3d bloch_field(const DriveConfig& d, double t) {
  return {0.5 * d.signal(t), 0.0, -0.5 * d.w_q};
}

// exp(-i k . sigma)
Eigen::Matrix2cd su2_exponential(const Eigen::Vector3d& k) {
  const double angle = k.norm();
  const double c = std::cos(angle);
  const double s = angle > 0.0 ? std::sin(angle) / angle : 1.0;
  const Cplx i(0.0, 1.0);
  Eigen::Matrix2cd u;
  u(0, 0) = c - i * s * k.z();
  u(0, 1) = -i * s * k.x() - s * k.y();
  u(1, 0) = -i * s * k.x() + s * k.y();
  u(1, 1) = c + i * s * k.z();
  return u;
}

}  // namespace

PropagatorResult propagator_oracle(const DriveConfig& drive, int steps_per_period) {
  drive.validate();
  if (steps_per_period < (1 << 10)) {
    throw InvalidArgument("propagator_oracle: steps_per_period must be at least 1024, got " +
                          std::to_string(steps_per_period));
  }

  const double period = drive.period();
  const double dt = period / steps_per_period;
  const double gauss = std::sqrt(3.0) / 6.0;

  // Fourth-order Magnus step with two Gauss nodes; for su(2) the commutator
  // term reduces to a cross product of the Bloch fields.
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  for (int s = 0; s < steps_per_period; ++s) {
    const double t_mid = (s + 0.5) * dt;
    const Eigen::Vector3d a1 = bloch_field(drive, t_mid - gauss * dt);
    const Eigen::Vector3d a2 = bloch_field(drive, t_mid + gauss * dt);
    const Eigen::Vector3d k =
        0.5 * dt * (a1 + a2) + (std::sqrt(3.0) / 6.0) * dt * dt * a2.cross(a1);
    u = su2_exponential(k) * u;
  }

  PropagatorResult r;
  r.steps = steps_per_period;
  r.unitarity_defect = (u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm();
  if (r.unitarity_defect > 1e-8) {
    throw NumericalError("propagator_oracle: unitarity defect " +
                         std::to_string(r.unitarity_defect) +
                         " exceeds 1e-8; reduce the step size");
  }

  Eigen::ComplexEigenSolver<Eigen::Matrix2cd> solver(u, false);
  for (int i = 0; i < 2; ++i) {
    // U = exp(-i eps T)
    double phase = -std::arg(solver.eigenvalues()(i));
    if (phase >= kPi) phase -= 2.0 * kPi;
    r.eigenphases[i] = phase;
    r.quasienergies[i] = fold_quasienergy(phase / period, drive.omega);
  }
  if (r.quasienergies[0] > r.quasienergies[1]) {
    std::swap(r.quasienergies[0], r.quasienergies[1]);
    std::swap(r.eigenphases[0], r.eigenphases[1]);
  }
  return r;
}

}  // namespace bifloquet
