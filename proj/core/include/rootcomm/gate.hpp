// MCA2 channel gating: Butterworth low-pass on the per-channel stress,
// Boltzmann open probability, Nernst-Planck current, and per-biological-step
// calcium influx concentration.
#pragma once

#include <vector>

#include "rootcomm/trace.hpp"

namespace rootcomm {

// Physical constants (SI).
inline constexpr double kFaraday = 96485.0;      // C/mol
inline constexpr double kGasConstant = 8.314;    // J/(mol K)
inline constexpr double kTemperature = 298.0;    // K
inline constexpr int kCalciumValence = 2;

struct GateParams {
  double cutoff_hz = 250.0;
  int lpf_order = 2;
  double v_half_mv = 238.15;        // voltage of half activation
  double k_v_mv = 32.64;
  double sigma_half_mmhg = 72.32;   // pressure of half activation
  double k_sigma_mmhg = 16.13;
  double scale_l = 15.6871;         // open-probability scale factor
  double membrane_potential_v = 0.15;   // held constant
  double membrane_thickness_m = 7.0e-9;
  double delta_c_mol_m3 = 1.0;      // transmembrane Ca2+ difference
  double pore_area_m2 = 1.9635e-17;
  int n_channels = 40;
  double d0_cm2_s = 0.79e-5;        // zero-pressure diffusion coefficient
  double k_d_per_pa = 0.01;         // pressure sensitivity of diffusion
  double cytosol_volume_l = 1.0e-5;
  double bio_dt_s = 0.5;
  // Knobs (see README): the influx formula is used as printed (no Faraday
  // division) unless dimensional_influx is set; baseline_subtract removes the
  // zero-stress resting influx so silence admits no calcium.
  bool dimensional_influx = false;
  bool baseline_subtract = true;
};

// Causal Butterworth low-pass (biquad cascade, bilinear transform with
// frequency prewarping). Order >= 1.
PressureTrace lowpass(const PressureTrace& trace, double cutoff_hz, int order);

// Mean of the filtered stress over each biological window; bio_dt must be an
// integer multiple of the trace dt.
std::vector<double> downsample_bio(const PressureTrace& trace, double bio_dt_s);

// P0 = clamp(l * logistic((V - V_h)/k_V) * logistic((sigma - sigma_h)/k_sigma), 0, 1).
double open_probability(double v_mv, double sigma_mmhg, const GateParams& p);

// Nernst-Planck electrodiffusion current through one channel (A); sigma_f in
// mmHg (converted to Pa inside for the pressure-dependent diffusivity),
// cytosolic concentration c_c in nM.
double gate_current(double sigma_f_mmhg, const GateParams& p, double c_c_nm);

// Per-step influx concentration in nM: |I| t / (z V_cyt) * P0 * n_C, literal
// form (divided by Faraday only when dimensional_influx is set).
double influx_concentration(double current_a, double p0, const GateParams& p, double t_s);

// Chain stage: per-step influx for one biological window at the current
// cytosolic concentration, applying the baseline subtraction knob.
double gate_influx_step(double sigma_f_mmhg, double c_c_nm, const GateParams& p);

}  // namespace rootcomm
