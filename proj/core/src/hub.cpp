#include "rootcomm/hub.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rootcomm/errors.hpp"
#include "rootcomm/gate.hpp"

namespace rootcomm {

namespace {
constexpr double kAvogadro = 6.02214076e23;
}

double efflux(double c_c_nm, const HubParams& p) {
  if (c_c_nm < 165.0) return 0.0;
  const double low = p.k_eff2 * (c_c_nm - 155.0);
  if (c_c_nm < 200.0) return low;
  return std::max(p.k_eff1 * (c_c_nm - 195.0), low);
}

double rbohc_fraction(double c_c_nm, double k_c) {
  const double c = c_c_nm * 1.0e-9;  // mol/L
  const double c2 = c * c;
  return c2 / (k_c + c2);
}

double total_from_ppm(double abundance, double k_ppm) {
  return k_ppm * abundance / kAvogadro;
}

double h2o2_production_rate(double c_ac_mol_l, const HubParams& p) {
  return p.v_h_max * c_ac_mol_l / (p.m_h + c_ac_mol_l);
}

double h2o2_scavenging_rate(double h_mol_l, const HubParams& p) {
  return p.v_s_max * h_mol_l / (p.m_s + h_mol_l);
}

double nernst_potential(double c_ap_mol_l, double c_c_mol_l) {
  if (!(c_ap_mol_l > 0.0) || !(c_c_mol_l > 0.0)) {
    throw std::invalid_argument("nernst_potential: concentrations must be > 0");
  }
  return kGasConstant * kTemperature /
         (static_cast<double>(kCalciumValence) * kFaraday) *
         std::log(c_ap_mol_l / c_c_mol_l);
}

double annexin_current(double h_mol_l, double c_c_nm, const HubParams& p) {
  if (h_mol_l <= 0.0) return 0.0;
  const double hz = std::pow(h_mol_l, p.hill_z);
  const double kz = std::pow(p.k_a_mol_l, p.hill_z);
  const double hill = hz / (hz + kz);
  const double e_c = nernst_potential(p.c_apoplast_mol_l, c_c_nm * 1.0e-9);
  return p.annexin_conductance_s * hill * (e_c - p.membrane_potential_v);
}

double annexin_influx(double current_a, const HubParams& p, double t_s) {
  if (!(t_s >= 0.0)) throw std::invalid_argument("annexin_influx: t must be >= 0");
  return std::fabs(current_a) * t_s /
         (static_cast<double>(kCalciumValence) * p.cytosol_volume_l) *
         static_cast<double>(p.n_annexin) * 1.0e9;  // -> nM
}

HubState hub_step(const HubState& state, double c_m_nm, const HubParams& p) {
  if (!std::isfinite(state.c_c_nm) || !std::isfinite(state.h_mol_l)) {
    throw NumericError("hub_step: non-finite state");
  }
  const double c_a = annexin_influx(annexin_current(state.h_mol_l, state.c_c_nm, p),
                                    p, p.bio_dt_s);
  HubState next;
  next.c_c_nm = std::max(0.0, state.c_c_nm + c_m_nm + c_a - efflux(state.c_c_nm, p));

  double activation = rbohc_fraction(state.c_c_nm, p.k_c);
  if (p.rbohc_baseline_subtract) {
    activation = std::max(0.0, activation - rbohc_fraction(p.c_rest_nm, p.k_c));
  }
  const double c_ac = p.rbohc_total_mol_l * activation;
  next.h_mol_l = std::max(
      0.0, state.h_mol_l + (h2o2_production_rate(c_ac, p) -
                            h2o2_scavenging_rate(state.h_mol_l, p)) * p.bio_dt_s);
  next.t_s = state.t_s + p.bio_dt_s;
  if (!std::isfinite(next.c_c_nm) || !std::isfinite(next.h_mol_l)) {
    throw NumericError("hub_step: integration produced non-finite values");
  }
  return next;
}

}  // namespace rootcomm
