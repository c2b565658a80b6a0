// End-to-end single-bit transduction chain: acoustic reception -> wall
// mechanics -> channel gating -> Ca2+/H2O2 hub -> carrier-regulation cascade,
// producing the active-PIN2 ratio and the grid modifiers for one bit slot.
#pragma once

#include <cstdint>
#include <vector>

#include "rootcomm/config.hpp"
#include "rootcomm/trace.hpp"

namespace rootcomm {

struct ChainResult {
  // Biological-timescale series, one entry per bio step boundary (size
  // n_steps + 1 for the state series, n_steps for the per-step drives).
  std::vector<double> t_bio_s;
  std::vector<double> sigma_f_mmhg;   // filtered per-channel stress, per step
  std::vector<double> c_m_nm;         // gate influx per step
  std::vector<double> c_c_nm;         // cytosolic Ca2+ at step boundaries
  std::vector<double> h_mol_l;        // apoplastic H2O2 at step boundaries
  std::vector<double> k_ac_mol_l;     // active CPK29 at step boundaries
  std::vector<double> p_a_mol_l;      // active PIN2 at step boundaries
  std::vector<double> o_a_mol_l;      // active ROP6 at step boundaries
  double apr = 1.0;                   // active-PIN2 end/start ratio
  double delta_p_mod = 1.0;
  double omega_p_mod = 1.0;
  // Fast-timescale traces, populated only when keep_traces is set.
  PressureTrace received_pa;
  PressureTrace stress_pa;
  PressureTrace gate_stress_mmhg_trace;
};

// Optional carried-over receiver state for links without inter-bit reset.
struct ChainInit {
  HubState hub;
  double o_a_mol_l = 0.0;
};

// Simulate one bit slot. bit selects whether the source emits; seed/bit_index
// determine the RNG streams (source and noise draw from separate streams so
// bit content never shifts the noise realization). When init is null the
// receiver starts from its resting state.
ChainResult run_chain(const SimConfig& cfg, int bit, std::uint64_t seed,
                      std::uint64_t bit_index, bool keep_traces = false,
                      const ChainInit* init = nullptr);

}  // namespace rootcomm
