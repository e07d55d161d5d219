#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bifloquet/drive.hpp"

namespace bifloquet {

/// Integer-order Bessel function of the first kind, |x| <= 100, |order| <= 200.
double bessel_j(int order, double x);

/// Bessel arguments of the two tones: Omega cos(nu)/(N1 w), Omega sin(nu)/(N2 w).
double tone1_argument(const DriveConfig& drive);
double tone2_argument(const DriveConfig& drive);

struct MultimodeParams {
  double theta = 0.0;       // sqrt(b^2 + (w_q J01 J02)^2)
  double j_tilde_01 = 1.0;  // J_0(tone 1)
  double j_tilde_02 = 1.0;  // J_0(tone 2)
  double j_tilde_11 = 0.0;  // J_1(tone 1)
  double j_tilde_12 = 0.0;  // J_1(tone 2)
};

MultimodeParams multimode_params(const DriveConfig& drive);
double theta(const DriveConfig& drive);

struct MultimodeGap {
  double gap = 0.0;        // sqrt((w - Theta)^2 + (w_q J11 J12)^2)
  double alternate = 0.0;  // w - sqrt(Theta^2 + w^2 + w_q^2 J11^2 J12^2 - 2 Theta w)
  bool in_regime = false;  // w >= w_q and nu <= pi/12
};

MultimodeGap gap_multimode(const DriveConfig& drive);

/// b (w/Theta - 1) / gap. Throws PoleError at a vanishing gap.
double bias_sensitivity_multimode(const DriveConfig& drive);

struct OptimalFrequency {
  double omega_star = 0.0;
  double residual = 0.0;  // |Theta(w*) - w*|
  int iterations = 0;
  bool damped = false;
};

/// Solves w = Theta(w) by fixed-point iteration from sqrt(b^2 + w_q^2).
/// drive.omega is ignored. Throws NonConvergence after 200 iterations.
OptimalFrequency optimal_base_frequency(const DriveConfig& drive);

/// Multiphoton resonance b = k w + delta with k = m N1 + l N2.
struct ResonanceIndex {
  int m = 0;
  int l = 0;
  int k = 0;
  double delta = 0.0;

  /// Reads delta off drive.b.
  static ResonanceIndex from_drive(int m, int l, const DriveConfig& drive);
  /// Bias that realizes (m, l, delta) at the drive's N1, N2, w.
  static double bias_for(int m, int l, double delta, const DriveConfig& drive);

  /// |delta| > 0.1 w: outside the nearly degenerate regime.
  bool regime_warning(double omega) const;
  void validate(const DriveConfig& drive) const;
};

struct RwaResult {
  Eigen::Matrix2d hamiltonian;
  double gap = 0.0;
  double coupling = 0.0;  // -(w_q/2) J_{-m}(x1) J_{-l}(x2)
};

RwaResult rwa_gap(const DriveConfig& drive, const ResonanceIndex& res);

struct StarkShift {
  double chi = 0.0;
  int j_max = 0;
  std::vector<std::pair<int, int>> excluded_terms;  // (j, p) with j N1 + p N2 = -k
};

/// Second-order level shift. Every (j, p) in the quasi-degenerate set is
/// dropped; a retained denominator below 1e-8 w throws PoleError.
StarkShift stark_shift_chi(const DriveConfig& drive, const ResonanceIndex& res,
                           int j_max = 40);

/// sqrt(gap_RWA^2 + 4 chi delta + 4 chi^2). Throws PerturbativeRegimeError
/// on a negative radicand.
double gvv_gap(const DriveConfig& drive, const ResonanceIndex& res, double chi);

struct GvvHamiltonian {
  Eigen::Matrix2d hamiltonian;
  double gap = 0.0;  // eigenvalue splitting, sqrt((delta - 2 chi)^2 + 4 c^2)
};

/// The 2x2 effective Hamiltonian with the Stark shift on the diagonal.
GvvHamiltonian gvv_hamiltonian(const DriveConfig& drive, const ResonanceIndex& res,
                               double chi);

enum class GvvMode { Full, FastDrive };

/// Full: (delta + 2 chi)(1 + 2 dchi/db) / gap_GVV, with dchi/db by central
/// difference (h = 1e-6). FastDrive drops the dchi/db term.
double gvv_bias_sensitivity(const DriveConfig& drive, const ResonanceIndex& res,
                            const StarkShift& chi, GvvMode mode);

}  // namespace bifloquet
