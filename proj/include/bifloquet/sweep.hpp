#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "bifloquet/analytic.hpp"
#include "bifloquet/drive.hpp"
#include "bifloquet/floquet.hpp"
#include "bifloquet/noise.hpp"

namespace bifloquet {

/// Per-point status bits. Only the first three appear in the documented
/// token list; the rest are extra diagnostics.
enum PointFlag : std::uint32_t {
  kFlagDegenerate = 1u << 0,
  kFlagTrackingWarn = 1u << 1,
  kFlagGvvInvalid = 1u << 2,
  kFlagOneSided = 1u << 3,
  kFlagTruncationWarn = 1u << 4,
  kFlagFailed = 1u << 5,
};

/// Semicolon-separated tokens in bit order; empty for no flags.
std::string flags_to_string(std::uint32_t flags);
std::uint32_t flags_from_string(const std::string& text);

/// Inclusive linear range.
struct Range {
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  std::vector<double> values() const;
  void validate(const char* name) const;
};

struct OmegaPolicy {
  enum class Kind { Fixed, PerPointOptimal };
  Kind kind = Kind::Fixed;
  double omega = 1.0;

  static OmegaPolicy fixed(double omega) { return {Kind::Fixed, omega}; }
  static OmegaPolicy optimal() { return {Kind::PerPointOptimal, 0.0}; }
};

struct GridSpec {
  Range b_range{-1.0, 1.0, 201};
  Range nu_range{0.0, kPi / 2.0, 201};
  OmegaPolicy omega_policy;
  DriveConfig drive;  // b, nu and omega are overwritten per point

  void validate() const;
};

struct PointResult {
  double b = 0.0;
  double nu = 0.0;
  double omega = 0.0;
  double gap = std::numeric_limits<double>::quiet_NaN();  // canonical_gap, in [0, w/2]
  double dgap_db = std::numeric_limits<double>::quiet_NaN();
  double dgap_domega_amp = std::numeric_limits<double>::quiet_NaN();
  double gamma_phi = std::numeric_limits<double>::quiet_NaN();
  double t_phi = std::numeric_limits<double>::quiet_NaN();
  double omega_star = std::numeric_limits<double>::quiet_NaN();  // per-point policy only
  double g0 = std::numeric_limits<double>::quiet_NaN();
  double g_n1 = std::numeric_limits<double>::quiet_NaN();  // weight at k = N1
  double g_n2 = std::numeric_limits<double>::quiet_NaN();  // weight at k = N2
  double tracking_overlap = 1.0;
  std::uint32_t flags = 0;
  std::string error;  // set when kFlagFailed
};

struct SweepResult {
  std::vector<double> b_values;
  std::vector<double> nu_values;
  OmegaPolicy omega_policy;
  std::vector<PointResult> points;  // nu-major: index = i_nu * n_b + i_b

  std::size_t n_b() const { return b_values.size(); }
  std::size_t n_nu() const { return nu_values.size(); }
  const PointResult& at(std::size_t i_nu, std::size_t i_b) const {
    return points[i_nu * n_b() + i_b];
  }
  /// Largest finite-or-infinite T_phi; NaN entries are skipped.
  double max_t_phi() const;
};

/// Evaluates one point. `previous` enables warm-start tracking; on a tracking
/// loss the point is re-solved cold and flagged. `spectrum_out` receives the
/// centre spectrum for chaining. Never throws on numerical failure.
PointResult evaluate_point(const DriveConfig& drive, const TruncationPolicy& trunc,
                           const NoiseModel& noise, const FloquetSpectrum* previous,
                           FloquetSpectrum* spectrum_out = nullptr);

/// Rows (fixed nu) are distributed over `threads` workers (0 = hardware
/// concurrency); results do not depend on the worker count.
SweepResult sweep_grid(const GridSpec& spec, const TruncationPolicy& trunc,
                       const NoiseModel& noise, int threads = 1);

/// Column-oriented numeric table with a trailing flags column.
struct Table {
  std::vector<std::string> columns;  // numeric columns, flags excluded
  std::vector<std::vector<double>> rows;
  std::vector<std::uint32_t> flags;

  std::size_t column_index(const std::string& name) const;
  std::vector<double> column(const std::string& name) const;
};

enum class LineAxis { Bias, Tone1Amplitude };

/// Sequential 1D scan with warm starts. Along Tone1Amplitude the second tone
/// amplitude of `drive` is held fixed.
Table sweep_line(const DriveConfig& drive, LineAxis axis, const Range& range,
                 const TruncationPolicy& trunc, const NoiseModel& noise);

/// Tone-1 scan at b = k w + delta with the RWA and GVV columns alongside the
/// exact gap. Tone-2 amplitude comes from `drive`.
Table fastscan(const DriveConfig& drive, int m, int l, double delta, const Range& tone1,
               const TruncationPolicy& trunc, const NoiseModel& noise, int j_max = 40);

/// Indices i with v[i-1] < v[i] >= v[i+1] (non-finite neighbours disqualify).
std::vector<std::size_t> find_local_maxima(const std::vector<double>& v);

/// count values of 1/delta, log-spaced over [inv_min, inv_max], as deltas.
std::vector<double> log_spaced_deltas(double inv_min, double inv_max, int count);

/// T_phi against 1/delta at each tone-1 amplitude in `tone1_values`.
Table delta_scan(const DriveConfig& drive, int m, int l,
                 const std::vector<double>& tone1_values,
                 const std::vector<double>& deltas, const TruncationPolicy& trunc,
                 const NoiseModel& noise);

struct SweetSpotReport {
  double tol_dc = 1e-4;
  double tol_ac = 1e-3;
  double sour_threshold = 1e-1;
  std::vector<std::size_t> dc_sweet;      // point indices
  std::vector<std::size_t> doubly_sweet;  // subset of dc_sweet
  std::vector<std::size_t> sour;          // dc sweet with |dgap/dOmega| >= threshold
};

SweetSpotReport find_sweet_spots(const SweepResult& result, double tol_dc = 1e-4,
                                 double tol_ac = 1e-3, double sour_threshold = 1e-1);

}  // namespace bifloquet
