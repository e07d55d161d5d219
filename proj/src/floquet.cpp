#include "bifloquet/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bifloquet/error.hpp"

namespace bifloquet {

namespace {

constexpr double kTieTolerance = 1e-6;
constexpr double kTruncationWeight = 1e-8;

struct StaticStates {
  Eigen::Vector2d plus;
  Eigen::Vector2d minus;
};

Eigen::Vector2d sign_fixed(Eigen::Vector2d v) {
  const Eigen::Index big = std::abs(v(0)) >= std::abs(v(1)) ? 0 : 1;
  if (v(big) < 0.0) v = -v;
  return v;
}

StaticStates static_eigenstates(const DriveConfig& d) {
  Eigen::Matrix2d h;
  h << -0.5 * d.w_q, 0.5 * d.b, 0.5 * d.b, 0.5 * d.w_q;
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(h);
  return {sign_fixed(solver.eigenvectors().col(1)),
          sign_fixed(solver.eigenvectors().col(0))};
}

struct Pick {
  Eigen::Index index = -1;
  bool tie = false;
};

// Highest score wins; scores within kTieTolerance of the best are resolved by
// central-harmonic weight, then by the lower index.
Pick pick_best(const std::vector<double>& score, const std::vector<double>& w0,
               const std::vector<bool>& excluded) {
  Pick p;
  double best = -1.0;
  for (std::size_t i = 0; i < score.size(); ++i) {
    if (!excluded[i] && score[i] > best) {
      best = score[i];
      p.index = static_cast<Eigen::Index>(i);
    }
  }
  if (p.index < 0) return p;
  for (std::size_t i = 0; i < score.size(); ++i) {
    const auto ii = static_cast<Eigen::Index>(i);
    if (excluded[i] || ii == p.index) continue;
    if (best - score[i] < kTieTolerance) {
      p.tie = true;
      if (w0[i] > w0[p.index] || (w0[i] == w0[p.index] && ii < p.index)) {
        p.index = ii;
      }
    }
  }
  return p;
}

// <shift_s(a)|b> where shift_s moves harmonic n to n + s.
double shifted_overlap(const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                       int n_max, int s) {
  double sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    const int src = n - s;
    if (src < -n_max || src > n_max) continue;
    const auto i = ExtendedMatrix::index(n_max, n, 0);
    const auto j = ExtendedMatrix::index(n_max, src, 0);
    sum += a(j) * b(i) + a(j + 1) * b(i + 1);
  }
  return sum;
}

double edge_weight(const Eigen::VectorXd& c, int n_max) {
  double w = 0.0;
  for (int n : {-n_max, -n_max + 1, n_max - 1, n_max}) {
    const auto i = ExtendedMatrix::index(n_max, n, 0);
    w += c(i) * c(i) + c(i + 1) * c(i + 1);
  }
  return w;
}

FloquetMode make_mode(const SymmetricEigen& eig, Eigen::Index i, double sign,
                      double omega) {
  FloquetMode m;
  m.eigenvalue = eig.values(i);
  m.quasienergy = fold_quasienergy(m.eigenvalue, omega);
  m.coeffs = sign * eig.vectors.col(i);
  return m;
}

}  // namespace

ExtendedMatrix build_extended_hamiltonian(const DriveConfig& drive,
                                          const TruncationConfig& trunc) {
  drive.validate();
  trunc.validate(drive);

  const int n_max = trunc.n_max;
  ExtendedMatrix h;
  h.n_max = n_max;
  h.entries = Eigen::MatrixXd::Zero(trunc.dim(), trunc.dim());

  for (int n = -n_max; n <= n_max; ++n) {
    const auto g = ExtendedMatrix::index(n_max, n, kGround);
    const auto e = g + 1;
    h.entries(g, g) = -0.5 * drive.w_q + n * drive.omega;
    h.entries(e, e) = 0.5 * drive.w_q + n * drive.omega;
    h.entries(g, e) = 0.5 * drive.b;
    h.entries(e, g) = 0.5 * drive.b;
  }

  auto couple = [&](int offset, double strength) {
    for (int n = -n_max; n + offset <= n_max; ++n) {
      const auto g = ExtendedMatrix::index(n_max, n, kGround);
      const auto g2 = ExtendedMatrix::index(n_max, n + offset, kGround);
      h.entries(g, g2 + 1) = strength;
      h.entries(g2 + 1, g) = strength;
      h.entries(g + 1, g2) = strength;
      h.entries(g2, g + 1) = strength;
    }
  };
  if (drive.tone1_active()) couple(drive.n1, 0.25 * drive.tone1_amplitude());
  if (drive.tone2_active()) couple(drive.n2, 0.25 * drive.tone2_amplitude());
  return h;
}

double fold_quasienergy(double energy, double omega) {
  double folded = energy - omega * std::floor(energy / omega + 0.5);
  if (folded >= 0.5 * omega) folded -= omega;
  if (folded < -0.5 * omega) folded += omega;
  return folded;
}

double canonical_gap(double gap, double omega) {
  const double r = std::fmod(std::abs(gap), omega);
  return std::min(r, omega - r);
}

double mode_overlap(const FloquetMode& a, int n_max_a, const FloquetMode& b,
                    int n_max_b) {
  const int n_common = std::min(n_max_a, n_max_b);
  double sum = 0.0;
  for (int n = -n_common; n <= n_common; ++n) {
    const auto i = ExtendedMatrix::index(n_max_a, n, 0);
    const auto j = ExtendedMatrix::index(n_max_b, n, 0);
    sum += a.coeffs(i) * b.coeffs(j) + a.coeffs(i + 1) * b.coeffs(j + 1);
  }
  return sum;
}

FloquetSpectrum select_physical_modes(const SymmetricEigen& eig,
                                      const DriveConfig& drive,
                                      const TruncationConfig& trunc,
                                      const FloquetSpectrum* previous) {
  const int n_max = trunc.n_max;
  const auto dim = static_cast<std::size_t>(trunc.dim());
  if (static_cast<std::size_t>(eig.values.size()) != dim ||
      static_cast<std::size_t>(eig.vectors.cols()) != dim) {
    throw InvalidArgument("select_physical_modes: decomposition of size " +
                          std::to_string(eig.values.size()) +
                          " does not match the truncation dimension " +
                          std::to_string(dim));
  }

  const auto c0 = ExtendedMatrix::index(n_max, 0, kGround);
  std::vector<double> w0(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const double a = eig.vectors(c0, i);
    const double e = eig.vectors(c0 + 1, i);
    w0[i] = a * a + e * e;
  }

  FloquetSpectrum spec;
  spec.omega = drive.omega;
  spec.n_max = n_max;

  if (previous == nullptr) {
    const StaticStates s = static_eigenstates(drive);
    std::vector<double> proj_plus(dim), proj_minus(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      const double a = eig.vectors(c0, i);
      const double e = eig.vectors(c0 + 1, i);
      proj_plus[i] = a * s.plus(0) + e * s.plus(1);
      proj_minus[i] = a * s.minus(0) + e * s.minus(1);
    }
    std::vector<double> score(dim);
    std::vector<bool> excluded(dim, false);
    for (std::size_t i = 0; i < dim; ++i) score[i] = proj_plus[i] * proj_plus[i];
    const Pick p = pick_best(score, w0, excluded);

    // Everything in the plus equivalence class is off limits for minus.
    const double lambda_p = eig.values(p.index);
    const Eigen::VectorXd vp = eig.vectors.col(p.index);
    for (std::size_t i = 0; i < dim; ++i) {
      const double d = (eig.values(static_cast<Eigen::Index>(i)) - lambda_p) / drive.omega;
      const double s_round = std::round(d);
      if (std::abs(d - s_round) > 0.25) continue;
      const double ov = shifted_overlap(vp, eig.vectors.col(static_cast<Eigen::Index>(i)),
                                        n_max, static_cast<int>(s_round));
      if (std::abs(ov) > 0.5) excluded[i] = true;
    }
    for (std::size_t i = 0; i < dim; ++i) score[i] = proj_minus[i] * proj_minus[i];
    const Pick m = pick_best(score, w0, excluded);
    if (m.index < 0) {
      throw NumericalError("select_physical_modes: no candidate left for the minus mode");
    }

    spec.plus = make_mode(eig, p.index, proj_plus[p.index] < 0.0 ? -1.0 : 1.0,
                          drive.omega);
    spec.minus = make_mode(eig, m.index, proj_minus[m.index] < 0.0 ? -1.0 : 1.0,
                           drive.omega);
    spec.degenerate = p.tie || m.tie;
  } else {
    const int n_prev = previous->n_max;
    std::vector<double> ov_plus(dim), ov_minus(dim);
    std::vector<double> score_plus(dim), score_minus(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      FloquetMode cand;
      cand.coeffs = eig.vectors.col(static_cast<Eigen::Index>(i));
      ov_plus[i] = mode_overlap(previous->plus, n_prev, cand, n_max);
      ov_minus[i] = mode_overlap(previous->minus, n_prev, cand, n_max);
      score_plus[i] = std::abs(ov_plus[i]);
      score_minus[i] = std::abs(ov_minus[i]);
    }
    std::vector<bool> excluded(dim, false);
    Pick p = pick_best(score_plus, w0, excluded);
    Pick m = pick_best(score_minus, w0, excluded);
    if (p.index == m.index) {
      // Both modes claim the same vector; the weaker claim yields.
      if (score_plus[p.index] >= score_minus[m.index]) {
        excluded[p.index] = true;
        m = pick_best(score_minus, w0, excluded);
      } else {
        excluded[m.index] = true;
        p = pick_best(score_plus, w0, excluded);
      }
      p.tie = true;
    }
    spec.plus = make_mode(eig, p.index, ov_plus[p.index] < 0.0 ? -1.0 : 1.0,
                          drive.omega);
    spec.minus = make_mode(eig, m.index, ov_minus[m.index] < 0.0 ? -1.0 : 1.0,
                           drive.omega);
    spec.degenerate = p.tie || m.tie;
    spec.warm_started = true;
    spec.tracking_overlap = std::min(score_plus[p.index], score_minus[m.index]);
  }

  spec.truncation_warning = edge_weight(spec.plus.coeffs, n_max) > kTruncationWeight ||
                            edge_weight(spec.minus.coeffs, n_max) > kTruncationWeight;
  return spec;
}

FloquetSpectrum solve_floquet(const DriveConfig& drive,
                              const TruncationConfig& trunc,
                              const FloquetSpectrum* previous) {
  const ExtendedMatrix h = build_extended_hamiltonian(drive, trunc);
  const SymmetricEigen eig = diagonalize_symmetric(h.entries);
  FloquetSpectrum spec = select_physical_modes(eig, drive, trunc, previous);
  for (FloquetMode* mode : {&spec.plus, &spec.minus}) {
    mode->eigenvalue = mode->coeffs.dot(h.entries * mode->coeffs);
    mode->quasienergy = fold_quasienergy(mode->eigenvalue, drive.omega);
  }
  return spec;
}

double quasienergy_gap(const FloquetSpectrum& spec) {
  return spec.eps_plus() - spec.eps_minus();
}

FloquetSpectrum shift_equivalence_class(const FloquetSpectrum& spec,
                                        int harmonics) {
  FloquetSpectrum out = spec;
  const int n_max = spec.n_max;
  for (FloquetMode* mode : {&out.plus, &out.minus}) {
    Eigen::VectorXd shifted = Eigen::VectorXd::Zero(mode->coeffs.size());
    for (int n = -n_max; n <= n_max; ++n) {
      const int src = n - harmonics;
      if (src < -n_max || src > n_max) continue;
      const auto i = ExtendedMatrix::index(n_max, n, 0);
      const auto j = ExtendedMatrix::index(n_max, src, 0);
      shifted(i) = mode->coeffs(j);
      shifted(i + 1) = mode->coeffs(j + 1);
    }
    mode->coeffs = shifted;
    mode->eigenvalue += harmonics * spec.omega;
    mode->quasienergy = fold_quasienergy(mode->eigenvalue, spec.omega);
  }
  return out;
}

FourierWeights::FourierWeights(int k_max, std::vector<double> values)
    : k_max_(k_max), values_(std::move(values)) {
  if (k_max_ < 0 || values_.size() != static_cast<std::size_t>(2 * k_max_ + 1)) {
    throw InvalidArgument("FourierWeights: expected 2 k_max + 1 values");
  }
}

double FourierWeights::at(int k) const {
  if (k < -k_max_ || k > k_max_) {
    throw InvalidArgument("FourierWeights: k = " + std::to_string(k) +
                          " outside [-k_max, k_max]");
  }
  return (*this)[k];
}

std::map<int, double> FourierWeights::to_map() const {
  std::map<int, double> m;
  for (int k = -k_max_; k <= k_max_; ++k) m.emplace(k, (*this)[k]);
  return m;
}

FourierWeights fourier_weights(const FloquetSpectrum& spec, int k_max) {
  const int n_max = spec.n_max;
  if (k_max < 0 || k_max > 2 * n_max) {
    throw InvalidArgument("fourier_weights: k_max = " + std::to_string(k_max) +
                          " must lie in [0, 2 n_max = " +
                          std::to_string(2 * n_max) + "]");
  }
  auto sx_correlation = [n_max](const Eigen::VectorXd& c, int k) {
    double sum = 0.0;
    for (int n = std::max(-n_max, -n_max - k); n <= std::min(n_max, n_max - k); ++n) {
      const auto i = ExtendedMatrix::index(n_max, n, 0);
      const auto j = ExtendedMatrix::index(n_max, n + k, 0);
      sum += c(i) * c(j + 1) + c(i + 1) * c(j);
    }
    return sum;
  };
  // The correlation is symmetric in k; evaluating k >= 0 once and mirroring
  // makes g_{-k} == g_k bit for bit.
  std::vector<double> values(2 * k_max + 1);
  for (int k = 0; k <= k_max; ++k) {
    const double g = 0.5 * (sx_correlation(spec.plus.coeffs, k) -
                            sx_correlation(spec.minus.coeffs, k));
    values[k_max + k] = g;
    values[k_max - k] = g;
  }
  return FourierWeights(k_max, std::move(values));
}

}  // namespace bifloquet
