// 11x11 root-cell auxin transport grid with membrane-bound PIN2/AUX1
// carriers, apoplastic wall compartments, and flux-sensitive PIN
// localization. Sound-exposed cells (left five columns) carry modified
// delta_p / omega_p; the middle column is xylem with doubled synthesis.
#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace rootcomm {

struct GridParams {
  double alpha_a = 0.5;   // auxin synthesis, uM/min
  double mu_a = 0.5;      // auxin decay, 1/min
  double alpha_p = 5.0;   // PIN2 pool synthesis
  double mu_p = 5.0;      // PIN2 pool decay
  double alpha_u = 5.0;   // AUX1 pool synthesis
  double mu_u = 5.0;      // AUX1 pool decay
  double omega_p = 0.5;   // max PIN2 membrane localization rate
  double delta_p = 0.05;  // PIN2 membrane dissociation rate
  double omega_u = 0.5;   // AUX1 membrane localization rate
  double delta_u = 0.05;  // AUX1 membrane dissociation rate
  double kappa_a_ef = 0.004;  // passive efflux permeability
  double kappa_a_in = 0.24;   // passive influx permeability
  double kappa_p_ef = 4.67;   // PIN2-induced efflux
  double kappa_u_in = 3.56;   // AUX1-induced influx
  double phi_a = 0.55;        // passive flux weight
  double phi_p = 0.27;        // PIN2 flux weight
  double phi_u = 0.55;        // AUX1 flux weight
  double phi_wall = 67.0;     // apoplast wall-pair diffusion rate
  double h_sens = 50.0;       // PIN localization flux sensitivity
  double theta = 2.0;         // flux threshold
  double dt_min = 0.01;       // Euler step, minutes
  int steps = 2000;
  int size = 11;
  double init_a = 0.0;        // initial cellular auxin
};

struct GridModifiers {
  double delta_p = 1.0;
  double omega_p = 1.0;
};

// Face order: N, E, S, W.
enum FaceDir : int { kNorth = 0, kEast = 1, kSouth = 2, kWest = 3 };

struct AuxinGrid {
  int rows = 0, cols = 0;
  std::vector<double> a, p, u;                 // cell pools
  std::vector<std::array<double, 4>> wall_a;   // apoplastic auxin A_ij
  std::vector<std::array<double, 4>> mem_p;    // membrane PIN2 P_ij
  std::vector<std::array<double, 4>> mem_u;    // membrane AUX1 U_ij
  std::vector<std::uint8_t> xylem, exposed;
  std::vector<double> alpha_a_eff, delta_p_eff, omega_p_eff;

  int index(int r, int c) const { return r * cols + c; }
};

// Uniform initial pools (a = init_a, pools at synthesis/decay balance,
// membranes at omega/delta balance), xylem synthesis doubled, modifiers
// applied to sound-exposed cells only.
AuxinGrid build_grid(const GridParams& params, const GridModifiers& modifiers);

// J~ = phi_a (k_ef a - k_in A) + phi_p P k_pef a - phi_u U k_uin A
// (positive = out of the cell into its apoplast side).
double carrier_flux(double a_i, double wall_a_ij, double mem_p_ij, double mem_u_ij,
                    const GridParams& params);

// Per-face PIN2 localization rates: H(J) = logistic(h (J/omega_p - theta))
// normalized across the cell's faces; rate = omega_p H p_i - delta_p P_ij.
std::array<double, 4> pin_localization(const std::array<double, 4>& fluxes,
                                       double p_i,
                                       const std::array<double, 4>& mem_p_faces,
                                       double omega_p_eff, double delta_p_eff,
                                       const GridParams& params);

// J_u = omega_u u_i - delta_u U_ij.
double aux1_flux(double u_i, double mem_u_ij, const GridParams& params);

// One explicit Euler step from a frozen snapshot; reflecting boundaries;
// pools clamped at zero (aborts on NaN or strongly negative updates).
void grid_step(AuxinGrid& grid, const GridParams& params, double dt_min);

void run_grid(AuxinGrid& grid, const GridParams& params, int steps);

// (mean a over right 5 columns - mean over left 5) / mean over non-xylem.
double polarity_index(const AuxinGrid& grid);

// Total auxin, cellular + apoplastic (conservation diagnostics).
double total_auxin(const AuxinGrid& grid);

}  // namespace rootcomm
