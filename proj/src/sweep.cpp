#include "bifloquet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <thread>

#include "bifloquet/error.hpp"
#include "bifloquet/sensitivity.hpp"

namespace bifloquet {

namespace {

constexpr double kContinuityOverlap = 0.9;
constexpr double kLostOverlap = 0.5;
constexpr double kDegenerateGap = 1e-6;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const char* const kFlagTokens[] = {"degenerate", "tracking_warn",   "gvv_invalid",
                                   "one_sided",  "truncation_warn", "failed"};
constexpr int kFlagCount = 6;

DriveConfig line_drive(const DriveConfig& base, LineAxis axis, double x, double tone2) {
  if (axis == LineAxis::Bias) {
    DriveConfig d = base;
    d.b = x;
    return d;
  }
  return DriveConfig::from_tone_amplitudes(base.w_q, base.b, x, tone2, base.n1, base.n2,
                                           base.omega);
}

}  // namespace

std::string flags_to_string(std::uint32_t flags) {
  std::string out;
  for (int i = 0; i < kFlagCount; ++i) {
    if (flags & (1u << i)) {
      if (!out.empty()) out += ';';
      out += kFlagTokens[i];
    }
  }
  return out;
}

std::uint32_t flags_from_string(const std::string& text) {
  std::uint32_t flags = 0;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ';')) {
    if (token.empty()) continue;
    const auto* it = std::find(std::begin(kFlagTokens), std::end(kFlagTokens), token);
    if (it == std::end(kFlagTokens)) throw InvalidArgument("unknown flag token '" + token + "'");
    flags |= 1u << (it - std::begin(kFlagTokens));
  }
  return flags;
}

std::vector<double> Range::values() const {
  std::vector<double> v(count);
  for (int i = 0; i < count; ++i) {
    v[i] = i == count - 1 ? max : min + (max - min) * i / (count - 1);
  }
  return v;
}

void Range::validate(const char* name) const {
  if (count < 2 || !std::isfinite(min) || !std::isfinite(max) || !(min < max)) {
    std::ostringstream os;
    os << name << ": need finite min < max and count >= 2 (got " << min << ", " << max
       << ", " << count << ")";
    throw InvalidArgument(os.str());
  }
}

void GridSpec::validate() const {
  b_range.validate("b range");
  nu_range.validate("nu range");
  if (nu_range.min < 0.0 || nu_range.max > kPi / 2.0 + 1e-12) {
    throw InvalidArgument("nu range must lie in [0, pi/2]");
  }
  if (omega_policy.kind == OmegaPolicy::Kind::Fixed &&
      !(omega_policy.omega > 0.0 && std::isfinite(omega_policy.omega))) {
    throw InvalidArgument("fixed omega must be positive");
  }
}

double SweepResult::max_t_phi() const {
  double best = kNaN;
  for (const auto& p : points) {
    if (std::isnan(p.t_phi)) continue;
    if (std::isnan(best) || p.t_phi > best) best = p.t_phi;
  }
  return best;
}

PointResult evaluate_point(const DriveConfig& drive, const TruncationPolicy& trunc,
                           const NoiseModel& noise, const FloquetSpectrum* previous,
                           FloquetSpectrum* spectrum_out) {
  PointResult r;
  r.b = drive.b;
  r.nu = drive.nu;
  r.omega = drive.omega;
  try {
    const TruncationConfig t = trunc.resolve(drive);
    FloquetSpectrum spec;
    if (previous != nullptr) {
      spec = solve_floquet(drive, t, previous);
      if (spec.tracking_overlap < kLostOverlap) {
        r.flags |= kFlagTrackingWarn;
        spec = solve_floquet(drive, t);
      } else if (spec.tracking_overlap < kContinuityOverlap) {
        r.flags |= kFlagTrackingWarn;
      }
    } else {
      spec = solve_floquet(drive, t);
    }
    r.tracking_overlap = spec.tracking_overlap;
    r.gap = canonical_gap(spec.raw_gap(), drive.omega);
    if (spec.degenerate || r.gap < kDegenerateGap) r.flags |= kFlagDegenerate;
    if (spec.truncation_warning) r.flags |= kFlagTruncationWarn;

    const FourierWeights w = fourier_weights(spec, t.k_max);
    r.g0 = w[0];
    if (drive.n1 <= w.k_max()) r.g_n1 = w[drive.n1];
    if (drive.n2 <= w.k_max()) r.g_n2 = w[drive.n2];
    const DephasingResult deph = dephasing_rate(w, drive, noise);
    r.gamma_phi = deph.gamma_phi;
    r.t_phi = deph.t_phi;
    if (spectrum_out != nullptr) *spectrum_out = spec;

    try {
      const SensitivityResult s = gap_sensitivities(drive, t, spec);
      r.dgap_db = s.d_gap_d_b;
      r.dgap_domega_amp = s.d_gap_d_omega_amp;
      if (s.one_sided) r.flags |= kFlagOneSided;
    } catch (const TrackingError& e) {
      r.flags |= kFlagTrackingWarn | kFlagFailed;
      r.error = e.what();
    }
  } catch (const std::exception& e) {
    r.flags |= kFlagFailed;
    r.error = e.what();
  }
  return r;
}

SweepResult sweep_grid(const GridSpec& spec, const TruncationPolicy& trunc,
                       const NoiseModel& noise, int threads) {
  spec.validate();
  noise.validate();
  SweepResult out;
  out.b_values = spec.b_range.values();
  out.nu_values = spec.nu_range.values();
  out.omega_policy = spec.omega_policy;
  const std::size_t nb = out.b_values.size();
  const std::size_t nnu = out.nu_values.size();
  out.points.resize(nb * nnu);

  auto run_row = [&](std::size_t row) {
    FloquetSpectrum prev;
    bool have_prev = false;
    for (std::size_t ib = 0; ib < nb; ++ib) {
      DriveConfig d = spec.drive;
      d.b = out.b_values[ib];
      d.nu = out.nu_values[row];
      PointResult& slot = out.points[row * nb + ib];
      double omega_star = kNaN;
      if (spec.omega_policy.kind == OmegaPolicy::Kind::PerPointOptimal) {
        try {
          omega_star = optimal_base_frequency(d).omega_star;
          d.omega = omega_star;
        } catch (const std::exception& e) {
          slot = PointResult{};
          slot.b = d.b;
          slot.nu = d.nu;
          slot.omega = kNaN;
          slot.flags = kFlagFailed;
          slot.error = e.what();
          continue;
        }
      } else {
        d.omega = spec.omega_policy.omega;
      }
      FloquetSpectrum cur;
      slot = evaluate_point(d, trunc, noise, have_prev ? &prev : nullptr, &cur);
      slot.omega_star = omega_star;
      if (!(slot.flags & kFlagFailed) || std::isfinite(slot.gap)) {
        prev = std::move(cur);
        have_prev = true;
      }
    }
  };

  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(nnu));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t row = next++; row < nnu; row = next++) run_row(row);
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

std::size_t Table::column_index(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw InvalidArgument("table has no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

std::vector<double> Table::column(const std::string& name) const {
  const std::size_t c = column_index(name);
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& row : rows) v.push_back(row[c]);
  return v;
}

Table sweep_line(const DriveConfig& drive, LineAxis axis, const Range& range,
                 const TruncationPolicy& trunc, const NoiseModel& noise) {
  range.validate(axis == LineAxis::Bias ? "b range" : "Omega1 range");
  noise.validate();
  const double tone2 = drive.tone2_amplitude();
  Table t;
  t.columns = {axis == LineAxis::Bias ? "b" : "Omega1"};
  for (const char* c : {"b", "Omega1", "Omega2", "nu", "omega", "gap", "dgap_db",
                        "dgap_dOmega", "gamma_phi", "t_phi", "g0", "g_N1", "g_N2"}) {
    if (t.columns.front() != c) t.columns.emplace_back(c);
  }

  FloquetSpectrum prev;
  bool have_prev = false;
  for (double x : range.values()) {
    PointResult p;
    DriveConfig d;
    try {
      d = line_drive(drive, axis, x, tone2);
      FloquetSpectrum cur;
      p = evaluate_point(d, trunc, noise, have_prev ? &prev : nullptr, &cur);
      if (std::isfinite(p.gap)) {
        prev = std::move(cur);
        have_prev = true;
      }
    } catch (const std::exception& e) {
      p.flags = kFlagFailed;
      p.error = e.what();
    }
    std::vector<double> row = {x};
    const double values[] = {d.b,     d.tone1_amplitude(), d.tone2_amplitude(), d.nu,
                             d.omega, p.gap,               p.dgap_db,           p.dgap_domega_amp,
                             p.gamma_phi, p.t_phi,         p.g0,                p.g_n1,
                             p.g_n2};
    // Skip the scanned coordinate in the tail (b for Bias, Omega1 otherwise).
    const int skip = axis == LineAxis::Bias ? 0 : 1;
    for (int i = 0; i < 13; ++i) {
      if (i != skip) row.push_back(values[i]);
    }
    t.rows.push_back(std::move(row));
    t.flags.push_back(p.flags);
  }
  return t;
}

Table fastscan(const DriveConfig& drive, int m, int l, double delta, const Range& tone1,
               const TruncationPolicy& trunc, const NoiseModel& noise, int j_max) {
  tone1.validate("Omega1 range");
  noise.validate();
  const double tone2 = drive.tone2_amplitude();
  const double bias = ResonanceIndex::bias_for(m, l, delta, drive);
  Table t;
  t.columns = {"Omega1", "b",          "Omega2",   "delta",          "gap",
               "gap_rwa", "gap_gvv",   "gap_gvv_matrix", "chi", "dgap_db",
               "dgap_db_gvv", "gamma_phi", "t_phi"};

  FloquetSpectrum prev;
  bool have_prev = false;
  for (double x : tone1.values()) {
    const DriveConfig d = DriveConfig::from_tone_amplitudes(drive.w_q, bias, x, tone2,
                                                            drive.n1, drive.n2, drive.omega);
    FloquetSpectrum cur;
    PointResult p = evaluate_point(d, trunc, noise, have_prev ? &prev : nullptr, &cur);
    if (std::isfinite(p.gap)) {
      prev = std::move(cur);
      have_prev = true;
    }

    const ResonanceIndex res = ResonanceIndex::from_drive(m, l, d);
    double rwa = kNaN, gvv = kNaN, gvv_matrix = kNaN, chi = kNaN, gvv_slope = kNaN;
    try {
      rwa = rwa_gap(d, res).gap;
      const StarkShift s = stark_shift_chi(d, res, j_max);
      chi = s.chi;
      gvv_matrix = gvv_hamiltonian(d, res, chi).gap;
      gvv = gvv_gap(d, res, chi);
      gvv_slope = gvv_bias_sensitivity(d, res, s, GvvMode::Full);
    } catch (const Error&) {
      p.flags |= kFlagGvvInvalid;
    }
    t.rows.push_back({x, bias, tone2, res.delta, p.gap, rwa, gvv, gvv_matrix, chi, p.dgap_db,
                      gvv_slope, p.gamma_phi, p.t_phi});
    t.flags.push_back(p.flags);
  }
  return t;
}

std::vector<std::size_t> find_local_maxima(const std::vector<double>& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (std::isnan(v[i - 1]) || std::isnan(v[i]) || std::isnan(v[i + 1])) continue;
    if (v[i] > v[i - 1] && v[i] >= v[i + 1]) out.push_back(i);
  }
  return out;
}

std::vector<double> log_spaced_deltas(double inv_min, double inv_max, int count) {
  if (!(inv_min > 0.0) || !(inv_max > inv_min) || !std::isfinite(inv_max) || count < 2) {
    throw InvalidArgument("log_spaced_deltas: need 0 < inv_min < inv_max and count >= 2");
  }
  std::vector<double> d(count);
  const double lo = std::log10(inv_min);
  const double hi = std::log10(inv_max);
  for (int i = 0; i < count; ++i) {
    d[i] = 1.0 / std::pow(10.0, lo + (hi - lo) * i / (count - 1));
  }
  return d;
}

Table delta_scan(const DriveConfig& drive, int m, int l,
                 const std::vector<double>& tone1_values, const std::vector<double>& deltas,
                 const TruncationPolicy& trunc, const NoiseModel& noise) {
  noise.validate();
  for (double dl : deltas) {
    if (dl == 0.0 || !std::isfinite(dl)) throw InvalidArgument("delta_scan: delta must be nonzero");
  }
  const double tone2 = drive.tone2_amplitude();
  Table t;
  t.columns = {"Omega1", "delta", "inv_delta", "b", "gap", "dgap_db", "gamma_phi", "t_phi"};
  for (double x : tone1_values) {
    for (double dl : deltas) {
      const double bias = ResonanceIndex::bias_for(m, l, dl, drive);
      const DriveConfig d = DriveConfig::from_tone_amplitudes(drive.w_q, bias, x, tone2,
                                                              drive.n1, drive.n2, drive.omega);
      const PointResult p = evaluate_point(d, trunc, noise, nullptr);
      t.rows.push_back({x, dl, 1.0 / dl, bias, p.gap, p.dgap_db, p.gamma_phi, p.t_phi});
      t.flags.push_back(p.flags);
    }
  }
  return t;
}

SweetSpotReport find_sweet_spots(const SweepResult& result, double tol_dc, double tol_ac,
                                 double sour_threshold) {
  if (!(tol_dc > 0.0) || !(tol_ac > 0.0) || !(sour_threshold > 0.0)) {
    throw InvalidArgument("find_sweet_spots: tolerances must be positive");
  }
  SweetSpotReport r;
  r.tol_dc = tol_dc;
  r.tol_ac = tol_ac;
  r.sour_threshold = sour_threshold;
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const PointResult& p = result.points[i];
    if (!(std::abs(p.dgap_db) < tol_dc)) continue;
    r.dc_sweet.push_back(i);
    const double ac = std::abs(p.dgap_domega_amp);
    if (ac < tol_ac) {
      r.doubly_sweet.push_back(i);
    } else if (ac >= sour_threshold) {
      r.sour.push_back(i);
    }
  }
  return r;
}

}  // namespace bifloquet
