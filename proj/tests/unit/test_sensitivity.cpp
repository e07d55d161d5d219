#include <gtest/gtest.h>

#include <cmath>

#include "bifloquet/error.hpp"
#include "bifloquet/floquet.hpp"
#include "bifloquet/sensitivity.hpp"

using namespace bifloquet;

namespace {

DriveConfig base_point(double b, double nu) {
  DriveConfig d;
  d.b = b;
  d.nu = nu;
  d.big_omega = 0.1;
  d.n1 = 3;
  d.n2 = 1;
  d.omega = 1.0;
  return d;
}

}  // namespace

TEST(Sensitivity, StaticBiasDerivative) {
  DriveConfig d;
  d.b = 0.7;
  d.omega = 5.0;
  d.n1 = 2;
  d.n2 = 1;
  const TruncationConfig t = default_truncation(d);
  EXPECT_NEAR(gap_sensitivity_bias(d, t), 0.7 / std::hypot(1.0, 0.7), 1e-8);
}

TEST(Sensitivity, AmplitudeDerivativeAtZeroDriveIsOneSided) {
  DriveConfig d;
  d.b = 0.4;
  d.omega = 7.0;
  d.n1 = 3;
  d.n2 = 1;
  const AmplitudeSensitivity a = gap_sensitivity_amplitude(d, default_truncation(d));
  EXPECT_TRUE(a.one_sided);
  // The gap is even in the drive amplitude.
  EXPECT_NEAR(a.value, 0.0, 1e-6);
}

TEST(Sensitivity, AmplitudeDerivativeMatchesWiderStencil) {
  const DriveConfig d = base_point(0.3, 0.4);
  const TruncationConfig t = default_truncation(d);
  const AmplitudeSensitivity a = gap_sensitivity_amplitude(d, t);
  const AmplitudeSensitivity wide = gap_sensitivity_amplitude(d, t, 1e-3);
  EXPECT_FALSE(a.one_sided);
  EXPECT_NEAR(a.value, wide.value, 1e-6 * std::max(1.0, std::abs(a.value)));
}

TEST(Sensitivity, CombinedUsesSameCentre) {
  const DriveConfig d = base_point(-0.45, 0.9);
  const TruncationConfig t = default_truncation(d);
  const FloquetSpectrum s = solve_floquet(d, t);
  const SensitivityResult r = gap_sensitivities(d, t, s);
  EXPECT_NEAR(r.d_gap_d_b, gap_sensitivity_bias(d, t), 1e-12);
  EXPECT_NEAR(r.d_gap_d_omega_amp, gap_sensitivity_amplitude(d, t).value, 1e-12);
  EXPECT_EQ(r.method, SensitivityMethod::FiniteDifference);
}

TEST(WeightIdentity, HoldsAcrossBaseParameters) {
  for (double b : {-0.8, -0.3, 0.15, 0.6}) {
    for (double nu : {0.1, 0.7, 1.3}) {
      const DriveConfig d = base_point(b, nu);
      const WeightIdentityReport r = verify_weight_identity(d, default_truncation(d), 1e-6);
      EXPECT_TRUE(r.passed) << r.describe();
    }
  }
}

TEST(WeightIdentity, StrongBichromaticDrive) {
  DriveConfig d;
  d.b = 0.35;
  d.big_omega = 2.5;
  d.nu = 0.8;
  d.n1 = 2;
  d.n2 = 1;
  d.omega = 3.0;
  const WeightIdentityReport r = verify_weight_identity(d, default_truncation(d), 1e-6);
  EXPECT_TRUE(r.passed) << r.describe();
  EXPECT_FALSE(r.describe().empty());
}

TEST(Tracking, LostReferenceThrows) {
  const DriveConfig d = base_point(0.3, 0.4);
  const TruncationConfig t = default_truncation(d);
  FloquetSpectrum ref = solve_floquet(d, t);
  ref.plus.coeffs.setZero();
  ref.minus.coeffs.setZero();
  EXPECT_THROW(tracked_raw_gap(d, t, ref), TrackingError);
}

TEST(Tracking, SelfReferenceReturnsRawGap) {
  const DriveConfig d = base_point(0.3, 0.4);
  const TruncationConfig t = default_truncation(d);
  const FloquetSpectrum ref = solve_floquet(d, t);
  EXPECT_NEAR(tracked_raw_gap(d, t, ref), ref.raw_gap(), 1e-12);
}
