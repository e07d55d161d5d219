#pragma once

#include <array>
#include <map>
#include <vector>

#include <Eigen/Dense>

#include "bifloquet/drive.hpp"
#include "bifloquet/linalg.hpp"

namespace bifloquet {

/// Qubit basis label: g = 0, e = 1 (sz = |g><g| - |e><e|).
enum Qubit : int { kGround = 0, kExcited = 1 };

/// Truncated Floquet Hamiltonian in the extended basis |n, alpha>, with
/// harmonic n in [-n_max, n_max]. Row/column index = 2 (n + n_max) + alpha.
struct ExtendedMatrix {
  int n_max = 0;
  Eigen::MatrixXd entries;

  Eigen::Index dim() const { return entries.rows(); }
  static Eigen::Index index(int n_max, int harmonic, int alpha) {
    return 2 * (harmonic + n_max) + alpha;
  }
  double operator()(int n, int alpha, int m, int beta) const {
    return entries(index(n_max, n, alpha), index(n_max, m, beta));
  }
};

/// Diagonal blocks -(w_q/2) sz + (b/2) sx + n w, blocks at harmonic offset
/// +-N1 (+-N2) equal to (Omega/4) cos(nu) sx ((Omega/4) sin(nu) sx).
ExtendedMatrix build_extended_hamiltonian(const DriveConfig& drive,
                                          const TruncationConfig& trunc);

struct FloquetMode {
  double eigenvalue = 0.0;   // unfolded eigenvalue of the extended matrix
  double quasienergy = 0.0;  // folded into [-omega/2, omega/2)
  Eigen::VectorXd coeffs;    // c_{n,alpha}, unit norm

  double coeff(int n_max, int n, int alpha) const {
    return coeffs(ExtendedMatrix::index(n_max, n, alpha));
  }
};

/// The two physical Floquet modes (one representative per equivalence class).
struct FloquetSpectrum {
  double omega = 1.0;
  int n_max = 0;
  FloquetMode plus;
  FloquetMode minus;

  bool degenerate = false;          // selection tie-break was needed
  bool truncation_warning = false;  // > 1e-8 weight on the two outermost harmonics
  bool warm_started = false;
  double tracking_overlap = 1.0;    // min overlap with the previous modes

  double eps_plus() const { return plus.quasienergy; }
  double eps_minus() const { return minus.quasienergy; }
  /// Difference of the unfolded eigenvalues; smooth in the drive parameters
  /// as long as the same representatives are tracked.
  double raw_gap() const { return plus.eigenvalue - minus.eigenvalue; }
};

/// Maps an energy into the first Brillouin zone [-omega/2, omega/2).
double fold_quasienergy(double energy, double omega);

/// Distance of a gap to the nearest multiple of omega, in [0, omega/2]. Two
/// gaps describe the same pair of equivalence classes iff these agree.
double canonical_gap(double gap, double omega);

/// Overlap <a|b> of two coefficient vectors, aligned by harmonic index when
/// the cutoffs differ.
double mode_overlap(const FloquetMode& a, int n_max_a, const FloquetMode& b,
                    int n_max_b);

/// Picks the two physical modes out of a complete decomposition.
///
/// Cold start (previous == nullptr): for each static eigenstate |s+->
/// of -(w_q/2) sz + (b/2) sx, the eigenvector with the largest weight on
/// |n = 0, s+-> wins; the minus search skips every shifted copy of the plus
/// mode. Warm start: maximal coefficient overlap with the previous modes.
/// Near ties (< 1e-6) go to the candidate with more n = 0 weight and set
/// `degenerate`.
FloquetSpectrum select_physical_modes(const SymmetricEigen& eig,
                                      const DriveConfig& drive,
                                      const TruncationConfig& trunc,
                                      const FloquetSpectrum* previous = nullptr);

/// Build, diagonalize, select, and refine the selected eigenvalues with the
/// Rayleigh quotient of the full matrix.
FloquetSpectrum solve_floquet(const DriveConfig& drive,
                              const TruncationConfig& trunc,
                              const FloquetSpectrum* previous = nullptr);

/// eps_plus - eps_minus of the folded quasienergies, in (-omega, omega).
double quasienergy_gap(const FloquetSpectrum& spec);

/// Moves both modes to the representative shifted by `harmonics` units of
/// omega. Physical observables must not change.
FloquetSpectrum shift_equivalence_class(const FloquetSpectrum& spec,
                                        int harmonics);

/// g_{k,phi} for k in [-k_max, k_max].
class FourierWeights {
 public:
  FourierWeights() = default;
  FourierWeights(int k_max, std::vector<double> values);

  int k_max() const { return k_max_; }
  double operator[](int k) const { return values_[k + k_max_]; }
  double at(int k) const;
  std::map<int, double> to_map() const;

 private:
  int k_max_ = 0;
  std::vector<double> values_{0.0};
};

/// g_k = 1/2 sum_{n,alpha,beta} [c+_{n,a} c+_{n+k,b} - c-_{n,a} c-_{n+k,b}] <a|sx|b>
FourierWeights fourier_weights(const FloquetSpectrum& spec, int k_max);

struct PropagatorResult {
  std::array<double, 2> eigenphases{};    // eps T, wrapped to [-pi, pi)
  std::array<double, 2> quasienergies{};  // ascending, folded
  double unitarity_defect = 0.0;          // ||U^dagger U - 1||_F
  int steps = 0;
};

/// One-period propagator of H(t) from a time-ordered product of fourth-order
/// Magnus steps. Independent of the extended-matrix route.
PropagatorResult propagator_oracle(const DriveConfig& drive, int steps_per_period);

}  // namespace bifloquet
