#include "rootcomm/channel.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

#include "rootcomm/errors.hpp"

namespace rootcomm {
namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double damping_ratio(const SoilMedium& medium, double f_hz) {
  if (!(f_hz >= 0.0) || !std::isfinite(f_hz)) {
    throw std::invalid_argument("damping_ratio: frequency must be finite and >= 0");
  }
  const double omega = kTwoPi * f_hz;
  return medium.viscosity_pa_s * omega / (2.0 * medium.g_si());
}

WaveNumbers wave_numbers(const SoilMedium& medium, double f_hz) {
  if (!(f_hz > 0.0) || !std::isfinite(f_hz)) {
    throw std::invalid_argument("wave_numbers: frequency must be finite and > 0");
  }
  WaveNumbers out;
  out.zeta = damping_ratio(medium, f_hz);
  const double omega = kTwoPi * f_hz;
  const double z4 = 1.0 + 4.0 * out.zeta * out.zeta;
  const double common = medium.rho_si() * omega * omega / (2.0 * medium.g_si() * z4);
  const double root = std::sqrt(z4);
  out.k1 = std::sqrt(common * (root + 1.0));
  out.k2 = std::sqrt(common * (root - 1.0));
  return out;
}

PressureTrace synthesize_received(const SoilMedium& medium, const SourceSpec& spec,
                                  double x_m, double duration_s, double dt_s,
                                  RngStream& rng) {
  if (!(duration_s > 0.0) || !(dt_s > 0.0) || !(x_m >= 0.0)) {
    throw std::invalid_argument("synthesize_received: need duration > 0, dt > 0, x >= 0");
  }
  if (spec.n_components < 1) {
    throw std::invalid_argument("synthesize_received: n_components must be >= 1");
  }

  const std::size_t n = static_cast<std::size_t>(std::llround(duration_s / dt_s));
  PressureTrace trace;
  trace.t0 = 0.0;
  trace.dt = dt_s;
  trace.samples.assign(n, 0.0);

  for (int c = 0; c < spec.n_components; ++c) {
    double f = rng.gaussian(spec.freq_mean_hz, spec.freq_std_hz);
    while (!(f > 0.0)) f = rng.gaussian(spec.freq_mean_hz, spec.freq_std_hz);
    const double amp_pa = rng.gaussian(spec.amp_mean_upa, spec.amp_std_upa) * 1.0e-6;
    const double phase = rng.uniform(0.0, kTwoPi);

    const WaveNumbers wn = wave_numbers(medium, f);
    const double gain = amp_pa * std::exp(-wn.k2 * x_m);
    const double omega = kTwoPi * f;
    const double phi = phase - wn.k1 * x_m;
    for (std::size_t i = 0; i < n; ++i) {
      trace.samples[i] += gain * std::cos(omega * (trace.dt * static_cast<double>(i)) + phi);
    }
  }
  return trace;
}

PressureTrace pink_noise(double duration_s, double dt_s, double rms_pa, RngStream& rng) {
  if (!(duration_s > 0.0) || !(dt_s > 0.0) || !(rms_pa >= 0.0)) {
    throw std::invalid_argument("pink_noise: need duration > 0, dt > 0, rms >= 0");
  }
  const std::size_t n = static_cast<std::size_t>(std::llround(duration_s / dt_s));
  PressureTrace trace;
  trace.t0 = 0.0;
  trace.dt = dt_s;
  trace.samples.assign(n, 0.0);
  if (rms_pa == 0.0 || n < 2) return trace;

  // Spectral synthesis: amplitude 1/sqrt(f) (flattened below 1 Hz), random
  // phase per bin, inverse real FFT, then scale to the requested RMS.
  const std::size_t n_bins = n / 2 + 1;
  fftw_complex* spec = fftw_alloc_complex(n_bins);
  double* time = fftw_alloc_real(n);
  spec[0][0] = 0.0;  // no DC
  spec[0][1] = 0.0;
  const double df = 1.0 / (dt_s * static_cast<double>(n));
  for (std::size_t k = 1; k < n_bins; ++k) {
    const double f = df * static_cast<double>(k);
    const double amp = 1.0 / std::sqrt(f < 1.0 ? 1.0 : f);
    const double phase = rng.uniform(0.0, kTwoPi);
    spec[k][0] = amp * std::cos(phase);
    spec[k][1] = amp * std::sin(phase);
  }
  if (n % 2 == 0) spec[n_bins - 1][1] = 0.0;  // real Nyquist bin

  fftw_plan plan = fftw_plan_dft_c2r_1d(static_cast<int>(n), spec, time, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += time[i] * time[i];
  const double rms = std::sqrt(acc / static_cast<double>(n));
  const double scale = rms > 0.0 ? rms_pa / rms : 0.0;
  for (std::size_t i = 0; i < n; ++i) trace.samples[i] = time[i] * scale;

  fftw_free(spec);
  fftw_free(time);
  return trace;
}

PressureTrace received_stress(const PressureTrace& signal, const PressureTrace& noise) {
  if (signal.samples.size() != noise.samples.size() || signal.dt != noise.dt) {
    throw std::invalid_argument("received_stress: traces must share dt and length");
  }
  PressureTrace out;
  out.t0 = signal.t0;
  out.dt = signal.dt;
  out.samples.resize(signal.samples.size());
  for (std::size_t i = 0; i < signal.samples.size(); ++i) {
    out.samples[i] = std::fabs(signal.samples[i] + noise.samples[i]);
  }
  return out;
}

}  // namespace rootcomm
