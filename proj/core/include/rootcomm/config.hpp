// Flat key-value configuration covering every model parameter and design
// knob, grouped by module ("module.key = value", '#' comments). Loading
// validates ranges, rejects unknown keys, and the effective configuration can
// be echoed next to outputs for provenance.
#pragma once

#include <cstdint>
#include <string>

#include "rootcomm/cascade.hpp"
#include "rootcomm/channel.hpp"
#include "rootcomm/gate.hpp"
#include "rootcomm/grid.hpp"
#include "rootcomm/hub.hpp"
#include "rootcomm/wall.hpp"

namespace rootcomm {

struct LinkParams {
  double bit_duration_s = 150.0;
  int n_bits = 5;
  double threshold = 5.0;
  double fast_dt_s = 0.0005;
  double bio_dt_s = 0.5;
  int runs = 20;
  int bits_per_run = 50;
  std::uint64_t base_seed = 3;
  bool reset_between_bits = true;
};

struct SimConfig {
  SoilMedium medium;
  SourceSpec source;
  double distance_m = 1.0;
  double noise_rms_pa = 1.0e-6;
  WallParams wall;
  GateParams gate;
  HubParams hub;
  CascadeParams cascade;
  GridParams grid;
  LinkParams link;
};

// Defaults for every parameter (tables baked in) with shared fields
// (biological step, membrane potential) synchronized.
SimConfig default_config();

// Parse a config file on top of the defaults. Throws ConfigError with the
// offending line/key on parse errors, unknown keys, or out-of-range values.
SimConfig load_config(const std::string& path);

// Apply a single "module.key=value" override (used by tests and the CLI).
void apply_override(SimConfig& cfg, const std::string& key, const std::string& value);

// Propagate shared fields and validate ranges; called by the loaders and
// after manual field edits.
void finalize_config(SimConfig& cfg);

// Write the effective configuration (full precision, reload-stable).
void write_config(const SimConfig& cfg, const std::string& path);

}  // namespace rootcomm
