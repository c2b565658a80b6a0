#include "rootcomm/cascade.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rootcomm/errors.hpp"

namespace rootcomm {

double cpk29_fraction(double c_c_nm, double k_k) {
  if (!(c_c_nm >= 0.0)) throw std::invalid_argument("cpk29_fraction: c must be >= 0");
  const double c = c_c_nm * 1.0e-9;
  const double c4 = c * c * c * c;
  if (std::isinf(c4)) return 1.0;  // overflow-stable saturation
  return c4 / (k_k + c4);
}

double goldbeter_koshland(double nu1, double nu2, double j1, double j2) {
  if (!(nu1 > 0.0) || !(nu2 >= 0.0) || !(j1 > 0.0) || !(j2 > 0.0)) {
    throw std::invalid_argument("goldbeter_koshland: arguments must be positive");
  }
  const double b = nu2 - nu1 + j1 * nu2 + j2 * nu1;
  const double disc = b * b - 4.0 * (nu2 - nu1) * nu1 * j2;
  if (disc < 0.0) {
    throw NumericError("goldbeter_koshland: negative discriminant");
  }
  return 2.0 * nu1 * j2 / (b + std::sqrt(disc));
}

double pin2_activation(double k_ac_mol_l, const CascadeParams& p) {
  if (!(k_ac_mol_l >= 0.0)) throw std::invalid_argument("pin2_activation: K_ac must be >= 0");
  const double g = goldbeter_koshland(p.nu1_p, p.gain_l_mol * k_ac_mol_l, p.j1_p, p.j2_p);
  return (1.0 - g) * p.pin2_total_mol_l;
}

double fer_fraction(double a_mean_um, double k_f) {
  if (!(a_mean_um >= 0.0)) throw std::invalid_argument("fer_fraction: A must be >= 0");
  const double a2 = a_mean_um * a_mean_um;
  return a2 / (k_f + a2);
}

double ropgef_activation(double f_a_mol_l, const CascadeParams& p) {
  if (!(f_a_mol_l >= 0.0)) throw std::invalid_argument("ropgef_activation: F_a must be >= 0");
  const double g = goldbeter_koshland(p.nu1_r, p.gain_l_mol * f_a_mol_l, p.j1_r, p.j2_r);
  return (1.0 - g) * p.ropgef4_total_mol_l;
}

double rop6_step(double o_a_mol_l, double g_a_ropgef_mol_l, double dt_s,
                 const CascadeParams& p) {
  const double rate = p.v_pm * g_a_ropgef_mol_l / (p.k_p + g_a_ropgef_mol_l);
  return std::min(o_a_mol_l + dt_s * rate, p.rop6_total_mol_l);
}

namespace {
double ratio_or_one(double start, double end) {
  if (!(start > 0.0)) return 1.0;  // degenerate start; caller-visible warning lives in chain
  return end / start;
}
}  // namespace

double delta_p_modifier(double p_a_start, double p_a_end) {
  return ratio_or_one(p_a_start, p_a_end);
}

double omega_p_modifier(double o_a_start, double o_a_end) {
  return ratio_or_one(o_a_start, o_a_end);
}

}  // namespace rootcomm
