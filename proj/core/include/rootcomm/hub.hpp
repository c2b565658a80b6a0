// Cytosolic Ca2+ / apoplastic H2O2 feedback hub: efflux control, RBOHC
// activation, H2O2 production and scavenging, and annexin-mediated Ca2+
// re-entry, integrated at the biological time step.
#pragma once

namespace rootcomm {

struct HubParams {
  double c_rest_nm = 150.0;       // resting cytosolic Ca2+
  double k_eff1 = 0.3;            // upper efflux branch gain (per step)
  double k_eff2 = 0.16;           // lower efflux branch gain (per step)
  double k_c = 1.0e-7;            // RBOHC half-activation constant (as printed)
  double rbohc_total_mol_l = 1.420265781e-8;
  double v_h_max = 4.0e-5;        // H2O2 production Vmax, mol/L/s
  double m_h = 1.0e-9;            // production Michaelis constant
  double v_s_max = 1.0e-5;        // scavenging Vmax, mol/L/s
  double m_s = 1.0e-4;            // scavenging Michaelis constant
  double annexin_conductance_s = 17.0e-12;  // G_a
  double k_a_mol_l = 1.336e-8;    // annexin H2O2 half-activation
  double hill_z = 2.0;            // annexin Hill coefficient
  int n_annexin = 40;
  double c_apoplast_mol_l = 0.01; // apoplastic Ca2+ (see README "Calibration")
  double membrane_potential_v = 0.15;
  double cytosol_volume_l = 1.0e-5;
  double bio_dt_s = 0.5;
  double k_ppm = 0.0;             // abundance->concentration factor; unset by default
  // Knob: drive RBOHC H2O2 production by the activation above the resting
  // fraction, preserving the exact resting fixed point.
  bool rbohc_baseline_subtract = true;
};

struct HubState {
  double c_c_nm = 150.0;   // cytosolic Ca2+
  double h_mol_l = 0.0;    // apoplastic H2O2
  double t_s = 0.0;
};

// Piecewise efflux (nM per step): 0 below 165; k_eff2 (c-155) in [165,200);
// max(k_eff1 (c-195), k_eff2 (c-155)) at or above 200.
double efflux(double c_c_nm, const HubParams& p);

// R_C = c^2 / (k_C + c^2), c in mol/L.
double rbohc_fraction(double c_c_nm, double k_c);

// C_total = k_ppm * abundance / N_A (extensibility hook; configured totals
// are authoritative defaults).
double total_from_ppm(double abundance, double k_ppm);

// Michaelis-Menten production/scavenging rates, mol/L/s.
double h2o2_production_rate(double c_ac_mol_l, const HubParams& p);
double h2o2_scavenging_rate(double h_mol_l, const HubParams& p);

// E_c = (RT / zF) ln(c_ap / c_c), both in mol/L.
double nernst_potential(double c_ap_mol_l, double c_c_mol_l);

// I_a = G_a * h^z/(h^z + k_a^z) * (E_c - dE), A.
double annexin_current(double h_mol_l, double c_c_nm, const HubParams& p);

// c_a = |I_a| t / (z V_cyt) * n_a, expressed in nM (literal form).
double annexin_influx(double current_a, const HubParams& p, double t_s);

// One biological step: calcium update (gate influx + annexin re-entry -
// efflux), then H2O2 update (production - scavenging), both from a frozen
// snapshot of the incoming state and clamped at zero.
HubState hub_step(const HubState& state, double c_m_nm, const HubParams& p);

}  // namespace rootcomm
