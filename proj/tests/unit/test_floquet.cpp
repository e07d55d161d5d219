#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bifloquet/drive.hpp"
#include "bifloquet/floquet.hpp"

using namespace bifloquet;

namespace {

DriveConfig bichromatic(double b = 0.3, double nu = 0.5) {
  DriveConfig d;
  d.b = b;
  d.big_omega = 0.6;
  d.nu = nu;
  d.n1 = 3;
  d.n2 = 1;
  d.omega = 1.7;
  return d;
}

}  // namespace

TEST(ExtendedMatrix, BlockStructure) {
  const DriveConfig d = bichromatic();
  const TruncationConfig t{6, 4};
  const ExtendedMatrix h = build_extended_hamiltonian(d, t);
  ASSERT_EQ(h.dim(), t.dim());
  EXPECT_LT((h.entries - h.entries.transpose()).norm(), 1e-15);
  const double a1 = 0.6 * std::cos(0.5) / 4, a2 = 0.6 * std::sin(0.5) / 4;
  for (int n = -6; n <= 6; ++n) {
    EXPECT_DOUBLE_EQ(h(n, 0, n, 0), -0.5 + n * 1.7);
    EXPECT_DOUBLE_EQ(h(n, 1, n, 1), 0.5 + n * 1.7);
    EXPECT_DOUBLE_EQ(h(n, 0, n, 1), 0.15);
    for (int m = -6; m <= 6; ++m) {
      if (m == n) continue;
      const double expect = std::abs(m - n) == 3 ? a1 : std::abs(m - n) == 1 ? a2 : 0.0;
      EXPECT_DOUBLE_EQ(h(n, 0, m, 1), expect);
      EXPECT_DOUBLE_EQ(h(n, 1, m, 0), expect);
      EXPECT_EQ(h(n, 0, m, 0), 0.0);
      EXPECT_EQ(h(n, 1, m, 1), 0.0);
    }
  }
}

TEST(Folding, FirstZone) {
  EXPECT_DOUBLE_EQ(fold_quasienergy(0.2, 1.0), 0.2);
  EXPECT_NEAR(fold_quasienergy(1.2, 1.0), 0.2, 1e-15);
  EXPECT_NEAR(fold_quasienergy(-0.7, 1.0), 0.3, 1e-15);
  EXPECT_NEAR(fold_quasienergy(0.5, 1.0), -0.5, 1e-15);
  for (double e = -7.3; e < 7.3; e += 0.37) {
    const double f = fold_quasienergy(e, 2.0);
    EXPECT_GE(f, -1.0);
    EXPECT_LT(f, 1.0);
    const double k = (e - f) / 2.0;
    EXPECT_NEAR(k, std::round(k), 1e-12);
  }
}

TEST(Folding, CanonicalGap) {
  EXPECT_DOUBLE_EQ(canonical_gap(0.3, 1.0), 0.3);
  EXPECT_NEAR(canonical_gap(0.8, 1.0), 0.2, 1e-15);
  EXPECT_NEAR(canonical_gap(-2.3, 1.0), 0.3, 1e-15);
  EXPECT_NEAR(canonical_gap(1.4142135623730951, 10.0), 1.4142135623730951, 1e-15);
  for (double g = -5; g < 5; g += 0.13) {
    EXPECT_NEAR(canonical_gap(g, 1.5), canonical_gap(g + 3 * 1.5, 1.5), 1e-12);
    EXPECT_LE(canonical_gap(g, 1.5), 0.75);
  }
}

TEST(Floquet, StaticGapIsRabiSplitting) {
  DriveConfig d;
  d.b = 1.0;
  d.omega = 10.0;
  d.n1 = 3;
  d.n2 = 1;
  const FloquetSpectrum s = solve_floquet(d, default_truncation(d));
  EXPECT_NEAR(quasienergy_gap(s), std::sqrt(2.0), 1e-13);
  EXPECT_NEAR(s.eps_plus(), std::sqrt(2.0) / 2, 1e-13);
  EXPECT_NEAR(s.eps_minus(), -std::sqrt(2.0) / 2, 1e-13);
}

TEST(Floquet, ResonantWeakDriveGivesHalfAmplitudeSplitting) {
  // In the rotating frame the drive (O/2) cos(wt) sx couples |g>,|e> with O/4.
  DriveConfig d;
  d.big_omega = 0.01;
  d.n1 = 1;
  d.n2 = 2;
  d.omega = 1.0;
  const FloquetSpectrum s = solve_floquet(d, default_truncation(d));
  EXPECT_NEAR(canonical_gap(s.raw_gap(), 1.0), 0.005, 2e-5);
}

TEST(Floquet, EquivalenceClassInvariance) {
  const DriveConfig d = bichromatic();
  const TruncationConfig t = default_truncation(d);
  const FloquetSpectrum s = solve_floquet(d, t);
  const FourierWeights w = fourier_weights(s, t.k_max);
  for (int shift : {-2, -1, 1, 3}) {
    const FloquetSpectrum z = shift_equivalence_class(s, shift);
    EXPECT_NEAR(z.raw_gap(), s.raw_gap(), 1e-12);
    EXPECT_NEAR(z.eps_plus(), s.eps_plus(), 1e-12);
    EXPECT_NEAR(z.eps_minus(), s.eps_minus(), 1e-12);
    const FourierWeights wz = fourier_weights(z, t.k_max);
    for (int k = -t.k_max; k <= t.k_max; ++k) EXPECT_NEAR(wz[k], w[k], 1e-12) << "k=" << k;
  }
}

TEST(Floquet, TruncationConvergence) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 6; ++i) {
    DriveConfig d;
    d.b = 2 * u(rng) - 1;
    d.big_omega = u(rng);
    d.nu = u(rng) * kPi / 2;
    d.n1 = 1 + i % 3;
    d.n2 = d.n1 == 1 ? 2 : 1;
    d.omega = 0.5 + 4 * u(rng);
    TruncationConfig t = default_truncation(d);
    const double g0 = solve_floquet(d, t).raw_gap();
    t.n_max += 10;
    EXPECT_NEAR(canonical_gap(solve_floquet(d, t).raw_gap() - g0, d.omega), 0.0, 1e-10);
  }
}

TEST(Floquet, TruncationWarningForTooFewHarmonics) {
  DriveConfig d = bichromatic();
  d.big_omega = 8.0;
  d.omega = 0.5;
  EXPECT_TRUE(solve_floquet(d, {5, 4}).truncation_warning);
  EXPECT_FALSE(solve_floquet(d, default_truncation(d)).truncation_warning);
}

TEST(Floquet, ModesAreNormalisedAndOrthogonal) {
  const DriveConfig d = bichromatic();
  const TruncationConfig t = default_truncation(d);
  const FloquetSpectrum s = solve_floquet(d, t);
  EXPECT_NEAR(s.plus.coeffs.norm(), 1.0, 1e-12);
  EXPECT_NEAR(s.minus.coeffs.norm(), 1.0, 1e-12);
  EXPECT_NEAR(std::abs(mode_overlap(s.plus, t.n_max, s.plus, t.n_max)), 1.0, 1e-12);
  EXPECT_NEAR(mode_overlap(s.plus, t.n_max, s.minus, t.n_max), 0.0, 1e-10);
}

TEST(Floquet, WarmStartTracksNearbyPoint) {
  const DriveConfig d = bichromatic(0.3);
  const TruncationConfig t = default_truncation(d);
  const FloquetSpectrum a = solve_floquet(d, t);
  const FloquetSpectrum b = solve_floquet(bichromatic(0.301), t, &a);
  EXPECT_TRUE(b.warm_started);
  EXPECT_GT(b.tracking_overlap, 0.99);
  EXPECT_NEAR(b.raw_gap(), a.raw_gap(), 1e-2);
  const FloquetSpectrum cold = solve_floquet(bichromatic(0.301), t);
  EXPECT_NEAR(canonical_gap(b.raw_gap(), d.omega), canonical_gap(cold.raw_gap(), d.omega),
              1e-12);
}

TEST(FourierWeights, StaticDriveHasOnlyDcWeight) {
  DriveConfig d;
  d.b = 0.4;
  d.omega = 2.0;
  d.n1 = 3;
  d.n2 = 1;
  const FloquetSpectrum s = solve_floquet(d, default_truncation(d));
  const FourierWeights w = fourier_weights(s, 6);
  EXPECT_NEAR(w[0], 0.4 / std::hypot(1.0, 0.4), 1e-13);
  for (int k = 1; k <= 6; ++k) {
    EXPECT_NEAR(w[k], 0.0, 1e-13);
    EXPECT_NEAR(w[-k], 0.0, 1e-13);
  }
}

TEST(FourierWeights, AccessorsAndMap) {
  FourierWeights w(2, {1, 2, 3, 4, 5});
  EXPECT_EQ(w.k_max(), 2);
  EXPECT_EQ(w[-2], 1);
  EXPECT_EQ(w.at(2), 5);
  EXPECT_THROW(w.at(3), std::exception);
  EXPECT_EQ(w.to_map().size(), 5u);
  EXPECT_EQ(w.to_map().at(0), 3);
}

TEST(FourierWeights, SymmetricUnderHarmonicReversal) {
  // Real coefficients: g_{-k} = g_k.
  const DriveConfig d = bichromatic();
  const TruncationConfig t = default_truncation(d);
  const FourierWeights w = fourier_weights(solve_floquet(d, t), t.k_max);
  for (int k = 1; k <= t.k_max; ++k) EXPECT_NEAR(w[k], w[-k], 1e-12);
}
