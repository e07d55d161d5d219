#include "bifloquet/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bifloquet/floquet.hpp"
#include "bifloquet/noise.hpp"
#include "bifloquet/sensitivity.hpp"

namespace bifloquet {

bool SelftestReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const SelftestCheck& c) { return c.passed; });
}

namespace {

template <class F>
SelftestCheck guarded(const std::string& name, F&& body) {
  SelftestCheck c;
  c.name = name;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.passed = false;
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

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

SelftestReport run_selftest() {
  SelftestReport report;

  report.checks.push_back(guarded("static gap", [](SelftestCheck& c) {
    DriveConfig d;
    d.b = 1.0;
    d.omega = 10.0;
    d.n1 = 3;
    const FloquetSpectrum s = solve_floquet(d, default_truncation(d));
    const double err = std::abs(quasienergy_gap(s) - std::sqrt(2.0));
    c.passed = err < 1e-12;
    std::ostringstream os;
    os << "|gap - sqrt(2)| = " << err;
    c.detail = os.str();
  }));

  report.checks.push_back(guarded("weight identity grid", [](SelftestCheck& c) {
    double worst = 0.0;
    int checked = 0;
    for (double b : {-0.7, -0.2, 0.3, 0.8}) {
      for (double nu : {0.1, 0.5, 1.0, 1.4}) {
        const DriveConfig d = base_point(b, nu);
        const WeightIdentityReport r = verify_weight_identity(d, default_truncation(d), 1e-4);
        worst = std::max(worst, r.residual / std::max(1.0, std::abs(r.g0)));
        ++checked;
      }
    }
    c.passed = worst <= 1e-4;
    std::ostringstream os;
    os << checked << " points, worst relative residual " << worst;
    c.detail = os.str();
  }));

  report.checks.push_back(guarded("propagator oracle", [](SelftestCheck& c) {
    double worst = 0.0;
    const DriveConfig cases[] = {
        base_point(0.0, kPi / 30.0),
        base_point(0.4, 1.2),
        DriveConfig{1.0, 0.3, 0.8, 0.6, 2, 1, 2.5},
    };
    for (const DriveConfig& d : cases) {
      const FloquetSpectrum s = solve_floquet(d, default_truncation(d));
      const PropagatorResult p = propagator_oracle(d, 1 << 14);
      const double exact = canonical_gap(p.quasienergies[1] - p.quasienergies[0], d.omega);
      worst = std::max(worst, std::abs(canonical_gap(s.raw_gap(), d.omega) - exact));
    }
    c.passed = worst < 1e-6;
    std::ostringstream os;
    os << "worst gap mismatch " << worst;
    c.detail = os.str();
  }));

  report.checks.push_back(guarded("static dephasing", [](SelftestCheck& c) {
    DriveConfig d;
    d.b = 1.0;
    d.omega = 10.0;
    const FloquetSpectrum s = solve_floquet(d, default_truncation(d));
    const DephasingResult r = dephasing_rate(fourier_weights(s, 4), d, NoiseModel{});
    const double expected = 2.0 * 9e-6 * 4.0 / std::sqrt(2.0);
    c.passed = std::abs(r.gamma_phi - expected) < 1e-12;
    std::ostringstream os;
    os << "gamma = " << r.gamma_phi << ", expected " << expected;
    c.detail = os.str();
  }));

  return report;
}

}  // namespace bifloquet
