#include <gtest/gtest.h>

#include <cmath>

#include "bifloquet/drive.hpp"
#include "bifloquet/error.hpp"

using namespace bifloquet;

namespace {

DriveConfig sample() {
  DriveConfig d;
  d.b = 0.3;
  d.big_omega = 0.7;
  d.nu = 0.4;
  d.n1 = 3;
  d.n2 = 1;
  d.omega = 1.3;
  return d;
}

}  // namespace

TEST(Drive, SignalMatchesDefinition) {
  const DriveConfig d = sample();
  for (double t : {0.0, 0.17, 1.9, 4.4}) {
    const double expect = 0.7 * std::cos(0.4) * std::cos(3 * 1.3 * t) +
                          0.7 * std::sin(0.4) * std::cos(1.3 * t) + 0.3;
    EXPECT_NEAR(d.signal(t), expect, 1e-14);
  }
}

TEST(Drive, SignalIsPeriodic) {
  const DriveConfig d = sample();
  for (double t : {0.0, 0.5, 2.2}) EXPECT_NEAR(d.signal(t), d.signal(t + d.period()), 1e-12);
}

TEST(Drive, ToneAmplitudesRoundTrip) {
  const DriveConfig d = DriveConfig::from_tone_amplitudes(1.0, 0.2, 0.3, 0.4, 3, 1, 2.0);
  EXPECT_NEAR(d.big_omega, 0.5, 1e-15);
  EXPECT_NEAR(d.tone1_amplitude(), 0.3, 1e-15);
  EXPECT_NEAR(d.tone2_amplitude(), 0.4, 1e-15);
  EXPECT_EQ(d.n1, 3);
  EXPECT_EQ(d.n2, 1);
  EXPECT_DOUBLE_EQ(d.omega, 2.0);
}

TEST(Drive, QuarterTurnSwitchesFirstToneOff) {
  DriveConfig d = sample();
  d.nu = kPi / 2;
  EXPECT_EQ(d.cos_nu(), 0.0);
  EXPECT_FALSE(d.tone1_active());
  EXPECT_TRUE(d.tone2_active());
  d.nu = 0.0;
  EXPECT_EQ(d.sin_nu(), 0.0);
  EXPECT_FALSE(d.tone2_active());
}

TEST(Drive, ValidateRejectsBadInput) {
  DriveConfig d = sample();
  EXPECT_NO_THROW(d.validate());
  auto bad = [&](auto mutate) {
    DriveConfig c = sample();
    mutate(c);
    EXPECT_THROW(c.validate(), InvalidArgument);
  };
  bad([](DriveConfig& c) { c.omega = 0; });
  bad([](DriveConfig& c) { c.w_q = -1; });
  bad([](DriveConfig& c) { c.big_omega = -0.1; });
  bad([](DriveConfig& c) { c.nu = 2.0; });
  bad([](DriveConfig& c) { c.nu = -0.1; });
  bad([](DriveConfig& c) { c.n1 = 0; });
  bad([](DriveConfig& c) { c.n2 = 3; });  // both tones at the same harmonic
}

TEST(Drive, EqualHarmonicsAllowedWithOneToneOff) {
  DriveConfig d = sample();
  d.n2 = 3;
  d.nu = 0.0;
  EXPECT_NO_THROW(d.validate());
}

TEST(Truncation, DefaultCutoffs) {
  const DriveConfig d = sample();
  const TruncationConfig t = default_truncation(d);
  const int expect = std::max(20, int(std::ceil(4 * (0.7 + 0.3 + 1.0) / 1.3)) + 3 + 10);
  EXPECT_EQ(t.n_max, expect);
  EXPECT_EQ(t.k_max, 12);
  EXPECT_EQ(t.dim(), 2 * (2 * t.n_max + 1));
}

TEST(Truncation, DefaultGrowsWithStrongSlowDrive) {
  DriveConfig d = sample();
  d.big_omega = 40;
  d.omega = 0.5;
  EXPECT_GE(default_truncation(d).n_max, int(4 * 41.3 / 0.5));
}

TEST(Truncation, PolicyOverrides) {
  const DriveConfig d = sample();
  TruncationPolicy p;
  EXPECT_EQ(p.resolve(d).n_max, default_truncation(d).n_max);
  p.n_max = 33;
  p.k_max = 5;
  EXPECT_EQ(p.resolve(d).n_max, 33);
  EXPECT_EQ(p.resolve(d).k_max, 5);
}

TEST(Truncation, ValidateRejectsTooSmall) {
  const DriveConfig d = sample();
  TruncationConfig t{2, 1};
  EXPECT_THROW(t.validate(d), InvalidArgument);
  t = {20, 41};
  EXPECT_THROW(t.validate(d), InvalidArgument);
  t = {20, -1};
  EXPECT_THROW(t.validate(d), InvalidArgument);
}
