#include "rootcomm/wall.hpp"

#include <cmath>
#include <stdexcept>

namespace rootcomm {

PressureTrace slow_trend(const PressureTrace& sigma_tilde, double tau_s) {
  if (sigma_tilde.samples.empty()) {
    throw std::invalid_argument("slow_trend: empty trace");
  }
  if (!(tau_s > 0.0)) {
    throw std::invalid_argument("slow_trend: tau_s must be > 0");
  }
  PressureTrace out;
  out.t0 = sigma_tilde.t0;
  out.dt = sigma_tilde.dt;
  out.samples.resize(sigma_tilde.samples.size());
  const double alpha = 1.0 - std::exp(-sigma_tilde.dt / tau_s);
  double acc = sigma_tilde.samples.front();
  out.samples[0] = acc;
  for (std::size_t i = 1; i < sigma_tilde.samples.size(); ++i) {
    acc += alpha * (sigma_tilde.samples[i] - acc);
    out.samples[i] = acc;
  }
  return out;
}

namespace {

// The bracket (tau_w/tau_s) * (sigma_tilde - trend) + trend, in Pa.
PressureTrace wall_bracket(const PressureTrace& sigma_pa, const WallParams& p) {
  PressureTrace tilde = sigma_pa;
  for (double& v : tilde.samples) v -= p.yield_pa;
  const PressureTrace trend = slow_trend(tilde, p.tau_s_s);
  const double ratio = p.tau_w_s / p.tau_s_s;
  PressureTrace out;
  out.t0 = sigma_pa.t0;
  out.dt = sigma_pa.dt;
  out.samples.resize(sigma_pa.samples.size());
  for (std::size_t i = 0; i < out.samples.size(); ++i) {
    out.samples[i] = ratio * (tilde.samples[i] - trend.samples[i]) + trend.samples[i];
  }
  return out;
}

}  // namespace

PressureTrace sensor_force(const PressureTrace& sigma_pa, const WallParams& p) {
  PressureTrace out = wall_bracket(sigma_pa, p);
  const double k = (p.mu_s_pa_s / p.mu_w_pa_s) * p.sensor_area_m2;
  for (double& v : out.samples) v *= k;
  return out;
}

PressureTrace channel_stress(const PressureTrace& force_n, double sensor_area_m2) {
  if (!(sensor_area_m2 > 0.0)) {
    throw std::invalid_argument("channel_stress: sensor area must be > 0");
  }
  PressureTrace out = force_n;
  const double k = 1.0 / (sensor_area_m2 * kPaPerMmHg);
  for (double& v : out.samples) v *= k;
  return out;
}

PressureTrace gate_stress_mmhg(const PressureTrace& sigma_pa, const WallParams& p) {
  PressureTrace out = wall_bracket(sigma_pa, p);
  // Zero input gives sigma_tilde == -Y constant: trend == -Y, difference 0,
  // so the bracket is the constant -Y. Referencing adds Y back so that
  // silence produces exactly zero.
  const double offset = p.reference_rest ? p.yield_pa : 0.0;
  const double k = p.gain * (p.mu_s_pa_s / p.mu_w_pa_s) / kPaPerMmHg;
  for (double& v : out.samples) v = (v + offset) * k;
  return out;
}

}  // namespace rootcomm
