#include "bifloquet/noise.hpp"

#include <cmath>
#include <string>

#include "bifloquet/error.hpp"

namespace bifloquet {

void NoiseModel::validate() const {
  for (double v : {v_f, v_d, ir_factor, temp_ratio, energy_scale}) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw InvalidArgument("noise model parameters must be positive and finite");
    }
  }
}

double bose_occupation(double freq, const NoiseModel& model) {
  if (!(freq > 0.0)) {
    throw InvalidArgument("bose_occupation: frequency must be positive, got " +
                          std::to_string(freq));
  }
  const double x = freq * model.temp_ratio / model.energy_scale;
  const double denom = std::expm1(x);
  if (!(denom > 0.0)) return std::numeric_limits<double>::max();
  return 1.0 / denom;
}

double spectral_density(double freq, const NoiseModel& model) {
  if (freq == 0.0 || !std::isfinite(freq)) {
    throw InvalidArgument("spectral_density: frequency must be finite and non-zero");
  }
  const double s_f = model.v_f * model.v_f * 2.0 * kPi / std::abs(freq);
  const double occupation = bose_occupation(std::abs(freq), model);
  const double thermal = freq > 0.0 ? 1.0 + occupation : occupation;
  const double scaled = freq / (2.0 * kPi);
  return s_f + thermal * model.v_d * scaled * scaled;
}

DephasingResult dephasing_rate(const std::map<int, double>& weights,
                               const DriveConfig& drive, const NoiseModel& model) {
  model.validate();
  const auto zero = weights.find(0);
  if (zero == weights.end()) {
    throw InvalidArgument("dephasing_rate: the k = 0 weight is required");
  }

  DephasingResult r;
  r.term_dc = 2.0 * model.v_f * model.ir_factor * std::abs(zero->second);
  for (const auto& [k, g] : weights) {
    if (k == 0 || g == 0.0) continue;
    r.term_ac += 2.0 * g * g * spectral_density(k * drive.omega, model);
  }
  r.gamma_phi = r.term_dc + r.term_ac;
  r.t_phi = r.gamma_phi < 1e-300 ? kInfiniteLifetime : 1.0 / r.gamma_phi;
  return r;
}

DephasingResult dephasing_rate(const FourierWeights& weights,
                               const DriveConfig& drive, const NoiseModel& model) {
  return dephasing_rate(weights.to_map(), drive, model);
}

}  // namespace bifloquet
