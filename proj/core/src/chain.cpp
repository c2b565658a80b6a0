#include "rootcomm/chain.hpp"

#include <algorithm>
#include <cmath>

#include "rootcomm/errors.hpp"
#include "rootcomm/gate.hpp"
#include "rootcomm/wall.hpp"

namespace rootcomm {

ChainResult run_chain(const SimConfig& cfg, int bit, std::uint64_t seed,
                      std::uint64_t bit_index, bool keep_traces,
                      const ChainInit* init) {
  const double duration = cfg.link.bit_duration_s;
  const double fast_dt = cfg.link.fast_dt_s;
  const double bio_dt = cfg.link.bio_dt_s;

  RngStream source_rng(seed, 4 * bit_index);
  RngStream noise_rng(seed, 4 * bit_index + 1);

  PressureTrace signal;
  if (bit != 0) {
    signal = synthesize_received(cfg.medium, cfg.source, cfg.distance_m, duration,
                                 fast_dt, source_rng);
  } else {
    signal.t0 = 0.0;
    signal.dt = fast_dt;
    signal.samples.assign(static_cast<std::size_t>(std::llround(duration / fast_dt)), 0.0);
  }
  PressureTrace noise = pink_noise(duration, fast_dt, cfg.noise_rms_pa, noise_rng);
  PressureTrace stress = received_stress(signal, noise);

  PressureTrace gate_stress = gate_stress_mmhg(stress, cfg.wall);
  PressureTrace filtered = lowpass(gate_stress, cfg.gate.cutoff_hz, cfg.gate.lpf_order);
  std::vector<double> sigma_f = downsample_bio(filtered, bio_dt);

  const std::size_t n_steps = sigma_f.size();
  ChainResult out;
  out.t_bio_s.resize(n_steps + 1);
  out.sigma_f_mmhg = sigma_f;
  out.c_m_nm.resize(n_steps);
  out.c_c_nm.resize(n_steps + 1);
  out.h_mol_l.resize(n_steps + 1);
  out.k_ac_mol_l.resize(n_steps + 1);
  out.p_a_mol_l.resize(n_steps + 1);
  out.o_a_mol_l.resize(n_steps + 1);

  HubState state;
  state.c_c_nm = init ? init->hub.c_c_nm : cfg.hub.c_rest_nm;
  state.h_mol_l = init ? init->hub.h_mol_l : 0.0;
  state.t_s = 0.0;

  auto record = [&](std::size_t i) {
    out.t_bio_s[i] = i * bio_dt;
    out.c_c_nm[i] = state.c_c_nm;
    out.h_mol_l[i] = state.h_mol_l;
    const double k_ac = cpk29_fraction(state.c_c_nm, cfg.cascade.k_k) *
                        cfg.cascade.cpk29_total_mol_l;
    out.k_ac_mol_l[i] = k_ac;
    out.p_a_mol_l[i] = pin2_activation(k_ac, cfg.cascade);
  };
  record(0);
  out.o_a_mol_l[0] = init ? init->o_a_mol_l : cfg.cascade.rop6_init_mol_l;

  const double p_a_start = out.p_a_mol_l[0];
  double o_a = out.o_a_mol_l[0];

  for (std::size_t i = 0; i < n_steps; ++i) {
    const double c_m = gate_influx_step(sigma_f[i], state.c_c_nm, cfg.gate);
    out.c_m_nm[i] = c_m;
    state = hub_step(state, c_m, cfg.hub);
    record(i + 1);

    // Apoplastic auxin signal driving FER, referenced to the resting PIN2
    // level so an idle chain leaves ROP6 untouched.
    const double ratio = out.p_a_mol_l[i + 1] / std::max(p_a_start, 1e-30);
    const double a_mean_um = cfg.cascade.fer_drive_um * std::max(ratio - 1.0, 0.0);
    const double f_a = fer_fraction(a_mean_um, cfg.cascade.k_f) *
                       cfg.cascade.fer_total_mol_l;
    const double g_a = ropgef_activation(f_a, cfg.cascade);
    o_a = rop6_step(o_a, g_a, bio_dt, cfg.cascade);
    out.o_a_mol_l[i + 1] = o_a;
  }

  const double p_a_end = out.p_a_mol_l[n_steps];
  out.apr = std::max(p_a_end, 1e-30) / std::max(p_a_start, 1e-30);
  out.delta_p_mod = delta_p_modifier(p_a_start, p_a_end);
  out.omega_p_mod = omega_p_modifier(out.o_a_mol_l[0], out.o_a_mol_l[n_steps]);

  if (!std::isfinite(out.apr)) {
    throw NumericError("run_chain: non-finite active-PIN2 ratio");
  }

  if (keep_traces) {
    out.received_pa = signal;
    out.stress_pa = stress;
    out.gate_stress_mmhg_trace = filtered;
  }
  return out;
}

}  // namespace rootcomm
