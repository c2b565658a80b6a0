#include "rootcomm/gate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rootcomm/wall.hpp"

namespace rootcomm {
namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double logistic(double x) { return 1.0 / (1.0 + std::exp(-x)); }

// One direct-form-II-transposed biquad.
struct Biquad {
  double b0, b1, b2, a1, a2;
  double s1 = 0.0, s2 = 0.0;
  double step(double x) {
    const double y = b0 * x + s1;
    s1 = b1 * x - a1 * y + s2;
    s2 = b2 * x - a2 * y;
    return y;
  }
};

// First-order low-pass section (for odd orders), bilinear transform.
struct OnePole {
  double b0, b1, a1;
  double s = 0.0;
  double step(double x) {
    const double y = b0 * x + s;
    s = b1 * x - a1 * y;
    return y;
  }
};

}  // namespace

PressureTrace lowpass(const PressureTrace& trace, double cutoff_hz, int order) {
  if (trace.samples.empty()) throw std::invalid_argument("lowpass: empty trace");
  if (order < 1) throw std::invalid_argument("lowpass: order must be >= 1");
  const double nyquist = 0.5 / trace.dt;
  if (!(cutoff_hz > 0.0) || !(cutoff_hz < nyquist)) {
    throw std::invalid_argument("lowpass: cutoff must lie in (0, Nyquist)");
  }

  // Bilinear transform with prewarp: K = tan(pi fc / fs).
  const double k = std::tan(kPi * cutoff_hz * trace.dt);
  const double k2 = k * k;

  std::vector<Biquad> biquads;
  for (int i = 0; i < order / 2; ++i) {
    // Butterworth pole pair quality factor.
    const double q = 1.0 / (2.0 * std::sin(kPi * (2.0 * i + 1.0) / (2.0 * order)));
    const double norm = 1.0 / (1.0 + k / q + k2);
    Biquad bq{};
    bq.b0 = k2 * norm;
    bq.b1 = 2.0 * bq.b0;
    bq.b2 = bq.b0;
    bq.a1 = 2.0 * (k2 - 1.0) * norm;
    bq.a2 = (1.0 - k / q + k2) * norm;
    biquads.push_back(bq);
  }
  OnePole pole{};
  const bool odd = (order % 2) != 0;
  if (odd) {
    const double norm = 1.0 / (1.0 + k);
    pole.b0 = k * norm;
    pole.b1 = pole.b0;
    pole.a1 = (k - 1.0) * norm;
  }

  PressureTrace out;
  out.t0 = trace.t0;
  out.dt = trace.dt;
  out.samples.resize(trace.samples.size());
  // Prime state so a constant input passes through unchanged from sample 0
  // (the filter is initialized at its DC steady state for the first sample).
  const double x0 = trace.samples.front();
  for (auto& bq : biquads) {
    bq.s2 = (bq.b2 - bq.a2) * x0;
    bq.s1 = (bq.b1 - bq.a1) * x0 + bq.s2;
  }
  if (odd) pole.s = pole.b1 * x0 - pole.a1 * x0;

  for (std::size_t i = 0; i < trace.samples.size(); ++i) {
    double v = trace.samples[i];
    for (auto& bq : biquads) v = bq.step(v);
    if (odd) v = pole.step(v);
    out.samples[i] = v;
  }
  return out;
}

std::vector<double> downsample_bio(const PressureTrace& trace, double bio_dt_s) {
  if (!(bio_dt_s > 0.0) || trace.dt <= 0.0) {
    throw std::invalid_argument("downsample_bio: need positive steps");
  }
  const double ratio = bio_dt_s / trace.dt;
  const long long n_per = std::llround(ratio);
  if (n_per < 1 || std::fabs(ratio - static_cast<double>(n_per)) > 1e-9 * ratio) {
    throw std::invalid_argument("downsample_bio: bio_dt must be an integer multiple of dt");
  }
  const std::size_t steps = trace.samples.size() / static_cast<std::size_t>(n_per);
  std::vector<double> out(steps, 0.0);
  for (std::size_t s = 0; s < steps; ++s) {
    double acc = 0.0;
    const std::size_t base = s * static_cast<std::size_t>(n_per);
    for (long long i = 0; i < n_per; ++i) acc += trace.samples[base + static_cast<std::size_t>(i)];
    out[s] = acc / static_cast<double>(n_per);
  }
  return out;
}

double open_probability(double v_mv, double sigma_mmhg, const GateParams& p) {
  const double raw = p.scale_l *
                     logistic((v_mv - p.v_half_mv) / p.k_v_mv) *
                     logistic((sigma_mmhg - p.sigma_half_mmhg) / p.k_sigma_mmhg);
  return std::clamp(raw, 0.0, 1.0);
}

double gate_current(double sigma_f_mmhg, const GateParams& p, double c_c_nm) {
  if (!(c_c_nm > 0.0)) throw std::invalid_argument("gate_current: c_c must be > 0");
  const double sigma_pa = sigma_f_mmhg * kPaPerMmHg;
  // Diffusivity cannot go negative however far the stress swings below rest.
  const double d_ca =
      p.d0_cm2_s * 1.0e-4 * std::max(1.0 + p.k_d_per_pa * sigma_pa, 0.0);  // m^2/s
  const double c_c_mol_m3 = c_c_nm * 1.0e-9 * 1.0e3;  // nM -> mol/L -> mol/m^3
  const double z = static_cast<double>(kCalciumValence);
  const double drift = kFaraday * z * c_c_mol_m3 * p.membrane_potential_v /
                       (kGasConstant * kTemperature * p.membrane_thickness_m);
  const double diffusion = p.delta_c_mol_m3 / p.membrane_thickness_m;
  return -z * kFaraday * d_ca * (diffusion + drift) * p.pore_area_m2;
}

double influx_concentration(double current_a, double p0, const GateParams& p, double t_s) {
  if (!(t_s >= 0.0)) throw std::invalid_argument("influx_concentration: t must be >= 0");
  double moles_per_l = std::fabs(current_a) * t_s /
                       (static_cast<double>(kCalciumValence) * p.cytosol_volume_l);
  if (p.dimensional_influx) moles_per_l /= kFaraday;
  return moles_per_l * p0 * static_cast<double>(p.n_channels) * 1.0e9;  // -> nM
}

double gate_influx_step(double sigma_f_mmhg, double c_c_nm, const GateParams& p) {
  const double v_mv = p.membrane_potential_v * 1.0e3;
  const double p0 = open_probability(v_mv, sigma_f_mmhg, p);
  const double current = gate_current(sigma_f_mmhg, p, c_c_nm);
  double influx = influx_concentration(current, p0, p, p.bio_dt_s);
  if (p.baseline_subtract) {
    const double p0_rest = open_probability(v_mv, 0.0, p);
    const double current_rest = gate_current(0.0, p, c_c_nm);
    influx -= influx_concentration(current_rest, p0_rest, p, p.bio_dt_s);
  }
  return influx > 0.0 ? influx : 0.0;
}

}  // namespace rootcomm
