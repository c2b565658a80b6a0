// Underground acoustic channel: stochastic multi-tone source, Kelvin-Voigt
// propagation (attenuation + phase delay) through soil, pink interference
// noise, and the rectified stress delivered to the root cell wall.
#pragma once

#include "rootcomm/rng.hpp"
#include "rootcomm/trace.hpp"

namespace rootcomm {

struct SoilMedium {
  double bulk_density_g_cm3 = 1.30;
  double viscosity_pa_s = 1019.0;
  double shear_modulus_mpa = 2.4;

  double rho_si() const { return bulk_density_g_cm3 * 1000.0; }      // kg/m^3
  double g_si() const { return shear_modulus_mpa * 1.0e6; }          // Pa
};

struct SourceSpec {
  double freq_mean_hz = 200.0;
  double freq_std_hz = 60.0;
  double amp_mean_upa = 20.0;   // micropascal
  double amp_std_upa = 1.0;
  int n_components = 100;
};

struct WaveNumbers {
  double k1 = 0.0;    // phase, rad/m
  double k2 = 0.0;    // attenuation, Np/m
  double zeta = 0.0;  // damping ratio
};

// zeta = eta * omega / (2 G), SI units. f in Hz.
double damping_ratio(const SoilMedium& medium, double f_hz);

// Kelvin-Voigt wave numbers; nonnegative real roots.
WaveNumbers wave_numbers(const SoilMedium& medium, double f_hz);

// Sum of n_components random tones, each attenuated by exp(-k2 x) and phase
// delayed by k1 x. Draw order per component: frequency (redrawn until > 0),
// amplitude, phase — fixed for reproducibility. Output unit: Pa.
PressureTrace synthesize_received(const SoilMedium& medium, const SourceSpec& spec,
                                  double x_m, double duration_s, double dt_s,
                                  RngStream& rng);

// 1/f-power noise over [1 Hz, Nyquist], spectral synthesis, scaled to the
// requested RMS. rms_pa == 0 yields an all-zero trace.
PressureTrace pink_noise(double duration_s, double dt_s, double rms_pa,
                         RngStream& rng);

// Rectified pressure magnitude |signal + noise| interpreted as wall stress (Pa).
PressureTrace received_stress(const PressureTrace& signal, const PressureTrace& noise);

}  // namespace rootcomm
