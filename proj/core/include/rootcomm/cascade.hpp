// Carrier-regulation cascade: CPK29 -> PIN2 phosphorylation via the
// Goldbeter-Koshland cycle (delta_p modifier), and apoplastic auxin -> FER ->
// ROPGEF -> ROP6 (omega_p modifier).
#pragma once

namespace rootcomm {

struct CascadeParams {
  double k_k = 1.0e-23;          // CPK29 Hill constant (as printed)
  double gain_l_mol = 8.0e11;    // kinase-activity proportionality
  double nu1_p = 5.0, j1_p = 0.1, j2_p = 5.0;   // PIN2 cycle
  double k_f = 1.0e-6;           // FER Hill constant (as printed, A in uM)
  double nu1_r = 5.0, j1_r = 0.1, j2_r = 5.0;   // ROPGEF cycle
  double v_pm = 0.1, k_p = 0.05;                // ROP6 activation Michaelis-Menten
  double cpk29_total_mol_l = 1.724252492e-7;
  double pin2_total_mol_l = 3.518272425e-8;
  double fer_total_mol_l = 4.370431894e-7;
  double ropgef4_total_mol_l = 4.634551495e-9;
  double rop6_total_mol_l = 5.830564784e-8;
  // Chain knobs (see README): resting active-ROP6 pool and the scale of the
  // apoplastic-auxin signal driving FER during a detected stimulus.
  double rop6_init_mol_l = 1.0e-9;
  double fer_drive_um = 0.1;
};

// R_K = c^4 / (k_K + c^4), c in mol/L (input in nM).
double cpk29_fraction(double c_c_nm, double k_k);

// Steady-state unmodified fraction of a two-enzyme phosphorylation cycle.
// G = 2 nu1 j2 / (B + sqrt(B^2 - 4 (nu2 - nu1) nu1 j2)),
// B = nu2 - nu1 + j1 nu2 + j2 nu1. Requires nu1 > 0, j1, j2 > 0, nu2 >= 0.
double goldbeter_koshland(double nu1, double nu2, double j1, double j2);

// P_a = (1 - G(nu1P, 8e11 K_ac, j1P, j2P)) * PIN2_total.
double pin2_activation(double k_ac_mol_l, const CascadeParams& p);

// R_F = A^2 / (k_F + A^2), A in uM as printed.
double fer_fraction(double a_mean_um, double k_f);

// G_a = (1 - G(nu1R, 8e11 F_a, j1R, j2R)) * ROPGEF4_total.
double ropgef_activation(double f_a_mol_l, const CascadeParams& p);

// O_a' = min(O_a + dt v_Pm G_a / (k_P + G_a), ROP6_total).
double rop6_step(double o_a_mol_l, double g_a_ropgef_mol_l, double dt_s,
                 const CascadeParams& p);

// End-over-start ratios applied by the grid; degenerate starts return 1.
double delta_p_modifier(double p_a_start, double p_a_end);
double omega_p_modifier(double o_a_start, double o_a_end);

}  // namespace rootcomm
