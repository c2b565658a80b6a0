// Viscoelastoplastic cell-wall / sensor mechanics: converts wall stress (Pa)
// into the force on one mechanosensitive channel and into per-channel
// pressure (mmHg).
#pragma once

#include "rootcomm/trace.hpp"

namespace rootcomm {

inline constexpr double kPaPerMmHg = 133.322;

struct WallParams {
  double mu_s_pa_s = 0.01;      // sensor viscosity
  double mu_w_pa_s = 13.0e10;   // wall viscosity
  double tau_w_s = 0.02;        // wall relaxation time
  double tau_s_s = 0.001;       // sensor relaxation time
  double yield_pa = 0.5;        // frictional yield stress Y
  double sensor_area_m2 = 9.110618695e-16;  // channel cross-section A_M

  // Chain-level knobs (see README "Calibration"): a dimensionless gain on the
  // sensor transfer, and referencing of the chain output to the zero-input
  // response so that silence maps to exactly zero gate stress.
  double gain = 2.3e20;
  bool reference_rest = true;
};

// Causal first-order exponential moving average with time constant tau_s,
// initialized at the first sample. alpha = 1 - exp(-dt/tau_s).
PressureTrace slow_trend(const PressureTrace& sigma_tilde, double tau_s);

// F(t) = (mu_s/mu_w) * ((tau_w/tau_s) * (sigma_tilde - trend) + trend) * A_M,
// with sigma_tilde = sigma - Y. Output in newtons. No gain/referencing here;
// this is the literal transfer.
PressureTrace sensor_force(const PressureTrace& sigma_pa, const WallParams& p);

// sigma_sensor(t) = F(t) / A_M, converted Pa -> mmHg.
PressureTrace channel_stress(const PressureTrace& force_n, double sensor_area_m2);

// Full chain stage: per-channel stress in mmHg with the calibration gain
// applied and (optionally) the zero-input response subtracted. With
// reference_rest the response to sigma == 0 (a constant -Y through the
// bracket) maps to exactly 0 mmHg.
PressureTrace gate_stress_mmhg(const PressureTrace& sigma_pa, const WallParams& p);

}  // namespace rootcomm
