#include "rootcomm/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "rootcomm/errors.hpp"

namespace rootcomm {
namespace {

enum class Kind { kDouble, kInt, kBool, kU64 };

struct Entry {
  const char* key;
  Kind kind;
  void* ptr;
};

std::vector<Entry> registry(SimConfig& c) {
  return {
      {"channel.bulk_density_g_cm3", Kind::kDouble, &c.medium.bulk_density_g_cm3},
      {"channel.viscosity_pa_s", Kind::kDouble, &c.medium.viscosity_pa_s},
      {"channel.shear_modulus_mpa", Kind::kDouble, &c.medium.shear_modulus_mpa},
      {"channel.freq_mean_hz", Kind::kDouble, &c.source.freq_mean_hz},
      {"channel.freq_std_hz", Kind::kDouble, &c.source.freq_std_hz},
      {"channel.amp_mean_upa", Kind::kDouble, &c.source.amp_mean_upa},
      {"channel.amp_std_upa", Kind::kDouble, &c.source.amp_std_upa},
      {"channel.n_components", Kind::kInt, &c.source.n_components},
      {"channel.distance_m", Kind::kDouble, &c.distance_m},
      {"channel.noise_rms_pa", Kind::kDouble, &c.noise_rms_pa},

      {"wall.mu_s_pa_s", Kind::kDouble, &c.wall.mu_s_pa_s},
      {"wall.mu_w_pa_s", Kind::kDouble, &c.wall.mu_w_pa_s},
      {"wall.tau_w_s", Kind::kDouble, &c.wall.tau_w_s},
      {"wall.tau_s_s", Kind::kDouble, &c.wall.tau_s_s},
      {"wall.yield_pa", Kind::kDouble, &c.wall.yield_pa},
      {"wall.sensor_area_m2", Kind::kDouble, &c.wall.sensor_area_m2},
      {"wall.gain", Kind::kDouble, &c.wall.gain},
      {"wall.reference_rest", Kind::kBool, &c.wall.reference_rest},

      {"gate.cutoff_hz", Kind::kDouble, &c.gate.cutoff_hz},
      {"gate.lpf_order", Kind::kInt, &c.gate.lpf_order},
      {"gate.v_half_mv", Kind::kDouble, &c.gate.v_half_mv},
      {"gate.k_v_mv", Kind::kDouble, &c.gate.k_v_mv},
      {"gate.sigma_half_mmhg", Kind::kDouble, &c.gate.sigma_half_mmhg},
      {"gate.k_sigma_mmhg", Kind::kDouble, &c.gate.k_sigma_mmhg},
      {"gate.scale_l", Kind::kDouble, &c.gate.scale_l},
      {"gate.membrane_potential_v", Kind::kDouble, &c.gate.membrane_potential_v},
      {"gate.membrane_thickness_m", Kind::kDouble, &c.gate.membrane_thickness_m},
      {"gate.delta_c_mol_m3", Kind::kDouble, &c.gate.delta_c_mol_m3},
      {"gate.pore_area_m2", Kind::kDouble, &c.gate.pore_area_m2},
      {"gate.n_channels", Kind::kInt, &c.gate.n_channels},
      {"gate.d0_cm2_s", Kind::kDouble, &c.gate.d0_cm2_s},
      {"gate.k_d_per_pa", Kind::kDouble, &c.gate.k_d_per_pa},
      {"gate.cytosol_volume_l", Kind::kDouble, &c.gate.cytosol_volume_l},
      {"gate.dimensional_influx", Kind::kBool, &c.gate.dimensional_influx},
      {"gate.baseline_subtract", Kind::kBool, &c.gate.baseline_subtract},

      {"hub.c_rest_nm", Kind::kDouble, &c.hub.c_rest_nm},
      {"hub.k_eff1", Kind::kDouble, &c.hub.k_eff1},
      {"hub.k_eff2", Kind::kDouble, &c.hub.k_eff2},
      {"hub.k_c", Kind::kDouble, &c.hub.k_c},
      {"hub.rbohc_total_mol_l", Kind::kDouble, &c.hub.rbohc_total_mol_l},
      {"hub.v_h_max", Kind::kDouble, &c.hub.v_h_max},
      {"hub.m_h", Kind::kDouble, &c.hub.m_h},
      {"hub.v_s_max", Kind::kDouble, &c.hub.v_s_max},
      {"hub.m_s", Kind::kDouble, &c.hub.m_s},
      {"hub.annexin_conductance_s", Kind::kDouble, &c.hub.annexin_conductance_s},
      {"hub.k_a_mol_l", Kind::kDouble, &c.hub.k_a_mol_l},
      {"hub.hill_z", Kind::kDouble, &c.hub.hill_z},
      {"hub.n_annexin", Kind::kInt, &c.hub.n_annexin},
      {"hub.c_apoplast_mol_l", Kind::kDouble, &c.hub.c_apoplast_mol_l},
      {"hub.k_ppm", Kind::kDouble, &c.hub.k_ppm},
      {"hub.rbohc_baseline_subtract", Kind::kBool, &c.hub.rbohc_baseline_subtract},

      {"cascade.k_k", Kind::kDouble, &c.cascade.k_k},
      {"cascade.gain_l_mol", Kind::kDouble, &c.cascade.gain_l_mol},
      {"cascade.nu1_p", Kind::kDouble, &c.cascade.nu1_p},
      {"cascade.j1_p", Kind::kDouble, &c.cascade.j1_p},
      {"cascade.j2_p", Kind::kDouble, &c.cascade.j2_p},
      {"cascade.k_f", Kind::kDouble, &c.cascade.k_f},
      {"cascade.nu1_r", Kind::kDouble, &c.cascade.nu1_r},
      {"cascade.j1_r", Kind::kDouble, &c.cascade.j1_r},
      {"cascade.j2_r", Kind::kDouble, &c.cascade.j2_r},
      {"cascade.v_pm", Kind::kDouble, &c.cascade.v_pm},
      {"cascade.k_p", Kind::kDouble, &c.cascade.k_p},
      {"cascade.cpk29_total_mol_l", Kind::kDouble, &c.cascade.cpk29_total_mol_l},
      {"cascade.pin2_total_mol_l", Kind::kDouble, &c.cascade.pin2_total_mol_l},
      {"cascade.fer_total_mol_l", Kind::kDouble, &c.cascade.fer_total_mol_l},
      {"cascade.ropgef4_total_mol_l", Kind::kDouble, &c.cascade.ropgef4_total_mol_l},
      {"cascade.rop6_total_mol_l", Kind::kDouble, &c.cascade.rop6_total_mol_l},
      {"cascade.rop6_init_mol_l", Kind::kDouble, &c.cascade.rop6_init_mol_l},
      {"cascade.fer_drive_um", Kind::kDouble, &c.cascade.fer_drive_um},

      {"grid.alpha_a", Kind::kDouble, &c.grid.alpha_a},
      {"grid.mu_a", Kind::kDouble, &c.grid.mu_a},
      {"grid.alpha_p", Kind::kDouble, &c.grid.alpha_p},
      {"grid.mu_p", Kind::kDouble, &c.grid.mu_p},
      {"grid.alpha_u", Kind::kDouble, &c.grid.alpha_u},
      {"grid.mu_u", Kind::kDouble, &c.grid.mu_u},
      {"grid.omega_p", Kind::kDouble, &c.grid.omega_p},
      {"grid.delta_p", Kind::kDouble, &c.grid.delta_p},
      {"grid.omega_u", Kind::kDouble, &c.grid.omega_u},
      {"grid.delta_u", Kind::kDouble, &c.grid.delta_u},
      {"grid.kappa_a_ef", Kind::kDouble, &c.grid.kappa_a_ef},
      {"grid.kappa_a_in", Kind::kDouble, &c.grid.kappa_a_in},
      {"grid.kappa_p_ef", Kind::kDouble, &c.grid.kappa_p_ef},
      {"grid.kappa_u_in", Kind::kDouble, &c.grid.kappa_u_in},
      {"grid.phi_a", Kind::kDouble, &c.grid.phi_a},
      {"grid.phi_p", Kind::kDouble, &c.grid.phi_p},
      {"grid.phi_u", Kind::kDouble, &c.grid.phi_u},
      {"grid.phi_wall", Kind::kDouble, &c.grid.phi_wall},
      {"grid.h_sens", Kind::kDouble, &c.grid.h_sens},
      {"grid.theta", Kind::kDouble, &c.grid.theta},
      {"grid.dt_min", Kind::kDouble, &c.grid.dt_min},
      {"grid.steps", Kind::kInt, &c.grid.steps},
      {"grid.size", Kind::kInt, &c.grid.size},
      {"grid.init_a", Kind::kDouble, &c.grid.init_a},

      {"link.bit_duration_s", Kind::kDouble, &c.link.bit_duration_s},
      {"link.n_bits", Kind::kInt, &c.link.n_bits},
      {"link.threshold", Kind::kDouble, &c.link.threshold},
      {"link.fast_dt_s", Kind::kDouble, &c.link.fast_dt_s},
      {"link.bio_dt_s", Kind::kDouble, &c.link.bio_dt_s},
      {"link.runs", Kind::kInt, &c.link.runs},
      {"link.bits_per_run", Kind::kInt, &c.link.bits_per_run},
      {"link.base_seed", Kind::kU64, &c.link.base_seed},
      {"link.reset_between_bits", Kind::kBool, &c.link.reset_between_bits},
  };
}

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

void assign(const Entry& entry, const std::string& raw, const std::string& where) {
  const std::string value = trim(raw);
  if (value.empty()) throw ConfigError(where + ": empty value for '" + entry.key + "'");
  std::istringstream in(value);
  switch (entry.kind) {
    case Kind::kDouble: {
      double v;
      in >> v;
      if (in.fail() || !(in >> std::ws).eof()) {
        throw ConfigError(where + ": cannot parse number for '" + entry.key + "'");
      }
      *static_cast<double*>(entry.ptr) = v;
      return;
    }
    case Kind::kInt: {
      long long v;
      in >> v;
      if (in.fail() || !(in >> std::ws).eof()) {
        throw ConfigError(where + ": cannot parse integer for '" + entry.key + "'");
      }
      *static_cast<int*>(entry.ptr) = static_cast<int>(v);
      return;
    }
    case Kind::kU64: {
      unsigned long long v;
      in >> v;
      if (in.fail() || !(in >> std::ws).eof()) {
        throw ConfigError(where + ": cannot parse unsigned integer for '" + entry.key + "'");
      }
      *static_cast<std::uint64_t*>(entry.ptr) = v;
      return;
    }
    case Kind::kBool: {
      bool v;
      if (value == "true" || value == "1") {
        v = true;
      } else if (value == "false" || value == "0") {
        v = false;
      } else {
        throw ConfigError(where + ": expected true/false for '" + entry.key + "'");
      }
      *static_cast<bool*>(entry.ptr) = v;
      return;
    }
  }
}

void require(bool ok, const char* msg) {
  if (!ok) throw ConfigError(std::string("config: ") + msg);
}

bool near_multiple(double big, double small) {
  const double ratio = big / small;
  return std::fabs(ratio - std::llround(ratio)) < 1e-9 * ratio && ratio >= 1.0;
}

}  // namespace

void finalize_config(SimConfig& c) {
  // Shared fields.
  c.gate.bio_dt_s = c.link.bio_dt_s;
  c.hub.bio_dt_s = c.link.bio_dt_s;
  c.hub.membrane_potential_v = c.gate.membrane_potential_v;
  c.hub.cytosol_volume_l = c.gate.cytosol_volume_l;

  require(c.medium.bulk_density_g_cm3 > 0 && c.medium.viscosity_pa_s > 0 &&
              c.medium.shear_modulus_mpa > 0,
          "soil parameters must be positive");
  require(c.source.n_components >= 1, "channel.n_components must be >= 1");
  require(c.source.freq_mean_hz > 0 && c.source.freq_std_hz >= 0,
          "channel frequency spec invalid");
  require(c.distance_m >= 0, "channel.distance_m must be >= 0");
  require(c.noise_rms_pa >= 0, "channel.noise_rms_pa must be >= 0");
  require(c.wall.mu_s_pa_s > 0 && c.wall.mu_w_pa_s > 0 && c.wall.tau_w_s > 0 &&
              c.wall.tau_s_s > 0 && c.wall.yield_pa > 0 && c.wall.sensor_area_m2 > 0 &&
              c.wall.gain > 0,
          "wall parameters must be positive");
  require(c.gate.lpf_order >= 1, "gate.lpf_order must be >= 1");
  require(c.gate.k_v_mv > 0 && c.gate.k_sigma_mmhg > 0 && c.gate.scale_l > 0,
          "gate slope/scale parameters must be positive");
  require(c.gate.n_channels >= 1, "gate.n_channels must be >= 1");
  require(c.link.fast_dt_s > 0 && c.link.bio_dt_s > 0 && c.link.bit_duration_s > 0,
          "link time steps must be positive");
  require(c.gate.cutoff_hz > 0 && c.gate.cutoff_hz < 0.5 / c.link.fast_dt_s,
          "gate.cutoff_hz must lie below the Nyquist rate of link.fast_dt_s");
  require(near_multiple(c.link.bio_dt_s, c.link.fast_dt_s),
          "link.bio_dt_s must be an integer multiple of link.fast_dt_s");
  require(near_multiple(c.link.bit_duration_s, c.link.bio_dt_s),
          "link.bit_duration_s must be an integer multiple of link.bio_dt_s");
  require(c.hub.hill_z >= 1, "hub.hill_z must be >= 1");
  require(c.hub.n_annexin >= 0, "hub.n_annexin must be >= 0");
  require(c.hub.c_apoplast_mol_l > 0, "hub.c_apoplast_mol_l must be > 0");
  require(c.cascade.rop6_init_mol_l >= 0, "cascade.rop6_init_mol_l must be >= 0");
  require(c.grid.size >= 3 && c.grid.size % 2 == 1, "grid.size must be odd and >= 3");
  require(c.grid.dt_min > 0 && c.grid.steps >= 0, "grid integration setup invalid");
  require(c.link.threshold > 0, "link.threshold must be > 0");
  require(c.link.n_bits >= 1 && c.link.runs >= 1 && c.link.bits_per_run >= 1,
          "link counts must be >= 1");
}

SimConfig default_config() {
  SimConfig c;
  finalize_config(c);
  return c;
}

void apply_override(SimConfig& cfg, const std::string& key, const std::string& value) {
  auto entries = registry(cfg);
  for (const auto& e : entries) {
    if (key == e.key) {
      assign(e, value, "override");
      return;
    }
  }
  throw ConfigError("unknown config key '" + key + "'");
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  SimConfig cfg;
  auto entries = registry(cfg);

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    const std::string where = path + ":" + std::to_string(line_no);
    if (eq == std::string::npos) {
      throw ConfigError(where + ": expected 'key = value'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = stripped.substr(eq + 1);
    bool found = false;
    for (const auto& e : entries) {
      if (key == e.key) {
        assign(e, value, where);
        found = true;
        break;
      }
    }
    if (!found) throw ConfigError(where + ": unknown config key '" + key + "'");
  }
  finalize_config(cfg);
  return cfg;
}

void write_config(const SimConfig& cfg, const std::string& path) {
  SimConfig copy = cfg;
  auto entries = registry(copy);
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write config file '" + path + "'");
  out << "# effective configuration (full precision, reload-stable)\n";
  char buf[64];
  for (const auto& e : entries) {
    out << e.key << " = ";
    switch (e.kind) {
      case Kind::kDouble:
        std::snprintf(buf, sizeof buf, "%.17g", *static_cast<double*>(e.ptr));
        out << buf;
        break;
      case Kind::kInt:
        out << *static_cast<int*>(e.ptr);
        break;
      case Kind::kU64:
        out << *static_cast<std::uint64_t*>(e.ptr);
        break;
      case Kind::kBool:
        out << (*static_cast<bool*>(e.ptr) ? "true" : "false");
        break;
    }
    out << "\n";
  }
}

}  // namespace rootcomm
