#pragma once

#include <limits>
#include <map>

#include "bifloquet/drive.hpp"
#include "bifloquet/floquet.hpp"

namespace bifloquet {

/// Lifetime reported when the dephasing rate vanishes (gamma < 1e-300).
inline constexpr double kInfiniteLifetime = std::numeric_limits<double>::infinity();

/// Environment coupled through sx: 1/f noise plus thermal (dielectric) noise.
/// Defaults are in units of energy_scale = w_q.
struct NoiseModel {
  double v_f = 9.0e-6;      // 1/f amplitude
  double v_d = 3.0e-6;      // thermal/dielectric prefactor
  double ir_factor = 4.0;   // sqrt|ln(w_ir tau)|
  double temp_ratio = 1.43; // w_q / (k_B T_E)
  double energy_scale = 1.0;

  void validate() const;
};

/// 1 / (exp(freq temp_ratio / w_q) - 1), freq > 0.
double bose_occupation(double freq, const NoiseModel& model);

/// S_f + S_d with the two-sided thermal term: emission (1 + n) above zero
/// frequency, absorption n below.
double spectral_density(double freq, const NoiseModel& model);

struct DephasingResult {
  double gamma_phi = 0.0;
  double t_phi = kInfiniteLifetime;
  double term_dc = 0.0;
  double term_ac = 0.0;

  bool infinite_lifetime() const { return t_phi == kInfiniteLifetime; }
};

/// gamma = 2 V_f ir |g_0| + sum_{k != 0} 2 |g_k|^2 S(k omega)
DephasingResult dephasing_rate(const std::map<int, double>& weights,
                               const DriveConfig& drive, const NoiseModel& model);
DephasingResult dephasing_rate(const FourierWeights& weights,
                               const DriveConfig& drive, const NoiseModel& model);

}  // namespace bifloquet
