#include "bifloquet/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "bifloquet/error.hpp"

namespace bifloquet {

namespace {

constexpr double kSeriesCrossover = 12.0;

long double bessel_series(int n, long double x) {
  const long double half = x / 2.0L;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= half / i;
  long double sum = term;
  const long double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<long double>(k) * (k + n));
    sum += term;
    if (std::fabs(term) <= 1e-22L * std::fabs(sum) && k > half) break;
  }
  return sum;
}

// Backward recurrence from far above max(n, x), normalized by
// J_0 + 2 sum_k J_2k = 1.
long double bessel_miller(int n, long double x) {
  const int top = std::max(n, static_cast<int>(std::ceil(x)));
  int start = top + 40 + static_cast<int>(10.0 * std::cbrt(static_cast<double>(x)));
  start += start % 2;

  constexpr long double kBig = 1e2000L;
  constexpr long double kRescale = 1e-2000L;
  long double above = 0.0L;     // J_{k+1}
  long double current = 1e-30L; // J_k, k = start
  long double norm = current;   // start is even
  long double result = (start == n) ? current : 0.0L;
  for (int k = start; k > 0; --k) {
    const long double below = (2.0L * k / x) * current - above;
    above = current;
    current = below;
    const int order = k - 1;
    if (order == n) result = current;
    if (order % 2 == 0) norm += (order == 0 ? 1.0L : 2.0L) * current;
    if (std::fabs(current) > kBig) {
      current *= kRescale;
      above *= kRescale;
      norm *= kRescale;
      result *= kRescale;
    }
  }
  return result / norm;
}

}  // namespace

double bessel_j(int order, double x) {
  if (!std::isfinite(x) || std::abs(x) > 100.0) {
    throw InvalidArgument("bessel_j: |x| must be at most 100, got " + std::to_string(x));
  }
  if (std::abs(order) > 200) {
    throw InvalidArgument("bessel_j: |order| must be at most 200, got " +
                          std::to_string(order));
  }
  int n = std::abs(order);
  double sign = (order < 0 && n % 2 == 1) ? -1.0 : 1.0;
  if (x < 0.0 && n % 2 == 1) sign = -sign;
  const long double ax = std::fabs(static_cast<long double>(x));
  if (ax == 0.0L) return n == 0 ? 1.0 : 0.0;
  const long double v = ax < kSeriesCrossover ? bessel_series(n, ax) : bessel_miller(n, ax);
  return sign * static_cast<double>(v);
}

double tone1_argument(const DriveConfig& drive) {
  return drive.tone1_amplitude() / (drive.n1 * drive.omega);
}

double tone2_argument(const DriveConfig& drive) {
  return drive.tone2_amplitude() / (drive.n2 * drive.omega);
}

MultimodeParams multimode_params(const DriveConfig& drive) {
  drive.validate();
  const double x1 = tone1_argument(drive);
  const double x2 = tone2_argument(drive);
  MultimodeParams p;
  p.j_tilde_01 = bessel_j(0, x1);
  p.j_tilde_02 = bessel_j(0, x2);
  p.j_tilde_11 = bessel_j(1, x1);
  p.j_tilde_12 = bessel_j(1, x2);
  p.theta = std::hypot(drive.b, drive.w_q * p.j_tilde_01 * p.j_tilde_02);
  return p;
}

double theta(const DriveConfig& drive) { return multimode_params(drive).theta; }

MultimodeGap gap_multimode(const DriveConfig& drive) {
  const MultimodeParams p = multimode_params(drive);
  const double c = drive.w_q * p.j_tilde_11 * p.j_tilde_12;
  MultimodeGap g;
  g.gap = std::hypot(drive.omega - p.theta, c);
  // Same radicand as the main form, other branch.
  g.alternate = drive.omega - g.gap;
  g.in_regime = drive.omega >= drive.w_q && drive.nu <= kPi / 12.0 + 1e-12;
  return g;
}

double bias_sensitivity_multimode(const DriveConfig& drive) {
  const MultimodeParams p = multimode_params(drive);
  const double gap = gap_multimode(drive).gap;
  if (drive.b == 0.0) return 0.0;
  if (gap <= 1e-12 * drive.omega || p.theta == 0.0) {
    std::ostringstream os;
    os << "bias_sensitivity_multimode: pole at b = " << drive.b << ", omega = " << drive.omega
       << " (gap " << gap << ", Theta " << p.theta << ")";
    throw PoleError(os.str());
  }
  return drive.b * (drive.omega / p.theta - 1.0) / gap;
}

OptimalFrequency optimal_base_frequency(const DriveConfig& drive) {
  drive.validate();
  constexpr int kMaxIterations = 200;
  constexpr double kTol = 1e-10;

  DriveConfig d = drive;
  double w = std::hypot(drive.b, drive.w_q);
  double last_step = std::numeric_limits<double>::infinity();
  OptimalFrequency r;
  for (int it = 1; it <= kMaxIterations; ++it) {
    d.omega = w;
    const double step = theta(d) - w;
    // Switch to damping once the plain map stops contracting.
    if (!r.damped && it > 1 && std::abs(step) >= std::abs(last_step)) r.damped = true;
    const double next = w + (r.damped ? 0.5 : 1.0) * step;
    if (!(next > 0.0) || !std::isfinite(next)) {
      throw NonConvergence("optimal_base_frequency: iterate left (0, inf)", it, next);
    }
    last_step = step;
    r.iterations = it;
    if (std::abs(next - w) < kTol) {
      d.omega = next;
      r.omega_star = next;
      r.residual = std::abs(theta(d) - next);
      return r;
    }
    w = next;
  }
  std::ostringstream os;
  os << "optimal_base_frequency: no convergence after " << kMaxIterations
     << " iterations at b = " << drive.b << ", nu = " << drive.nu;
  throw NonConvergence(os.str(), kMaxIterations, w);
}

ResonanceIndex ResonanceIndex::from_drive(int m, int l, const DriveConfig& drive) {
  ResonanceIndex r;
  r.m = m;
  r.l = l;
  r.k = m * drive.n1 + l * drive.n2;
  r.delta = drive.b - r.k * drive.omega;
  return r;
}

double ResonanceIndex::bias_for(int m, int l, double delta, const DriveConfig& drive) {
  return (m * drive.n1 + l * drive.n2) * drive.omega + delta;
}

bool ResonanceIndex::regime_warning(double omega) const {
  return std::abs(delta) > 0.1 * omega;
}

void ResonanceIndex::validate(const DriveConfig& drive) const {
  if (k != m * drive.n1 + l * drive.n2) {
    throw InvalidArgument("ResonanceIndex: k must equal m N1 + l N2");
  }
  const double expected = drive.b - k * drive.omega;
  if (!std::isfinite(delta) ||
      std::abs(delta - expected) > 1e-9 * (1.0 + std::abs(drive.b))) {
    throw InvalidArgument("ResonanceIndex: delta inconsistent with b = k omega + delta");
  }
}

RwaResult rwa_gap(const DriveConfig& drive, const ResonanceIndex& res) {
  drive.validate();
  res.validate(drive);
  RwaResult r;
  r.coupling = -0.5 * drive.w_q * bessel_j(-res.m, tone1_argument(drive)) *
               bessel_j(-res.l, tone2_argument(drive));
  r.hamiltonian << -0.5 * drive.b, r.coupling, r.coupling,
      0.5 * drive.b - res.k * drive.omega;
  r.gap = std::hypot(res.delta, 2.0 * r.coupling);
  return r;
}

StarkShift stark_shift_chi(const DriveConfig& drive, const ResonanceIndex& res, int j_max) {
  drive.validate();
  res.validate(drive);
  if (j_max < 10) throw InvalidArgument("stark_shift_chi: j_max must be at least 10");

  const double x1 = tone1_argument(drive);
  const double x2 = tone2_argument(drive);
  std::vector<double> sq1(2 * j_max + 1);
  std::vector<double> sq2(2 * j_max + 1);
  for (int j = -j_max; j <= j_max; ++j) {
    const double a = bessel_j(j, x1);
    const double c = bessel_j(j, x2);
    sq1[j + j_max] = a * a;
    sq2[j + j_max] = c * c;
  }

  StarkShift s;
  s.j_max = j_max;
  const double floor = 1e-8 * drive.omega;
  double sum = 0.0;
  for (int j = -j_max; j <= j_max; ++j) {
    for (int p = -j_max; p <= j_max; ++p) {
      const int order = j * drive.n1 + p * drive.n2;
      if (order == -res.k) {
        s.excluded_terms.emplace_back(j, p);
        continue;
      }
      const double weight = sq1[j + j_max] * sq2[p + j_max];
      if (weight == 0.0) continue;
      const double denom = drive.b + order * drive.omega;
      if (std::abs(denom) < floor) {
        std::ostringstream os;
        os << "stark_shift_chi: near-singular denominator " << denom << " at (j, p) = (" << j
           << ", " << p << ")";
        throw PoleError(os.str());
      }
      sum += weight / denom;
    }
  }
  s.chi = -0.25 * drive.w_q * drive.w_q * sum;
  return s;
}

double gvv_gap(const DriveConfig& drive, const ResonanceIndex& res, double chi) {
  const double rwa = rwa_gap(drive, res).gap;
  const double radicand = rwa * rwa + 4.0 * chi * res.delta + 4.0 * chi * chi;
  if (radicand < 0.0) {
    std::ostringstream os;
    os << "gvv_gap: negative radicand " << radicand << " (chi = " << chi
       << ", delta = " << res.delta << ")";
    throw PerturbativeRegimeError(os.str());
  }
  return std::sqrt(radicand);
}

GvvHamiltonian gvv_hamiltonian(const DriveConfig& drive, const ResonanceIndex& res,
                               double chi) {
  const RwaResult rwa = rwa_gap(drive, res);
  GvvHamiltonian g;
  g.hamiltonian = rwa.hamiltonian;
  g.hamiltonian(0, 0) += chi;
  g.hamiltonian(1, 1) -= chi;
  g.gap = std::hypot(res.delta - 2.0 * chi, 2.0 * rwa.coupling);
  return g;
}

double gvv_bias_sensitivity(const DriveConfig& drive, const ResonanceIndex& res,
                            const StarkShift& chi, GvvMode mode) {
  const double gap = gvv_gap(drive, res, chi.chi);
  if (gap == 0.0) throw PoleError("gvv_bias_sensitivity: vanishing GVV gap");
  const double lead = res.delta + 2.0 * chi.chi;
  if (mode == GvvMode::FastDrive) return lead / gap;

  constexpr double h = 1e-6;
  auto shifted = [&](double db) {
    DriveConfig d = drive;
    d.b += db;
    ResonanceIndex r = res;
    r.delta += db;
    return stark_shift_chi(d, r, chi.j_max).chi;
  };
  const double dchi = (shifted(h) - shifted(-h)) / (2.0 * h);
  return lead * (1.0 + 2.0 * dchi) / gap;
}

}  // namespace bifloquet
