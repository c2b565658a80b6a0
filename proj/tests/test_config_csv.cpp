#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>

#include "rootcomm/config.hpp"
#include "rootcomm/csv.hpp"
#include "rootcomm/errors.hpp"

using namespace rootcomm;

namespace {

std::string temp_path(const char* name) {
  return std::string("./") + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  f << text;
}

}  // namespace

TEST_CASE("defaults carry the published parameter values") {
  SimConfig cfg = default_config();
  CHECK(cfg.medium.bulk_density_g_cm3 == doctest::Approx(1.30));
  CHECK(cfg.medium.viscosity_pa_s == doctest::Approx(1019.0));
  CHECK(cfg.medium.shear_modulus_mpa == doctest::Approx(2.4));
  CHECK(cfg.source.freq_mean_hz == doctest::Approx(200.0));
  CHECK(cfg.source.amp_mean_upa == doctest::Approx(20.0));
  CHECK(cfg.gate.v_half_mv == doctest::Approx(238.15));
  CHECK(cfg.gate.sigma_half_mmhg == doctest::Approx(72.32));
  CHECK(cfg.gate.scale_l == doctest::Approx(15.6871));
  CHECK(cfg.gate.cutoff_hz == doctest::Approx(250.0));
  CHECK(cfg.hub.c_rest_nm == doctest::Approx(150.0));
  CHECK(cfg.link.bit_duration_s == doctest::Approx(150.0));
  CHECK(cfg.link.fast_dt_s == doctest::Approx(0.0005));
  CHECK(cfg.link.bio_dt_s == doctest::Approx(0.5));
  CHECK(cfg.grid.size == 11);
}

TEST_CASE("config writes are reload-stable") {
  SimConfig cfg = default_config();
  finalize_config(cfg);
  cfg.source.freq_mean_hz = 321.5;
  cfg.wall.gain = 1.25e20;
  const std::string path = temp_path("cfg_roundtrip.cfg");
  write_config(cfg, path);
  SimConfig back = load_config(path);
  CHECK(back.source.freq_mean_hz == cfg.source.freq_mean_hz);
  CHECK(back.wall.gain == cfg.wall.gain);
  CHECK(back.gate.cutoff_hz == cfg.gate.cutoff_hz);
  CHECK(back.link.base_seed == cfg.link.base_seed);
  std::remove(path.c_str());
}

TEST_CASE("unknown keys are rejected with their line number") {
  const std::string path = temp_path("cfg_unknown.cfg");
  write_file(path, "# comment\nchannel.bulk_density_g_cm3 = 1.4\nbogus.key = 1\n");
  try {
    (void)load_config(path);
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    const std::string what = e.what();
    CHECK(what.find("bogus.key") != std::string::npos);
    CHECK(what.find("3") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("malformed lines and bad values are rejected") {
  const std::string path = temp_path("cfg_bad.cfg");
  write_file(path, "channel.bulk_density_g_cm3 1.4\n");
  CHECK_THROWS_AS((void)load_config(path), ConfigError);
  write_file(path, "channel.bulk_density_g_cm3 = banana\n");
  CHECK_THROWS_AS((void)load_config(path), ConfigError);
  write_file(path, "channel.bulk_density_g_cm3 = -2\n");
  CHECK_THROWS_AS((void)load_config(path), ConfigError);
  std::remove(path.c_str());
}

TEST_CASE("validation catches inconsistent time steps and cutoffs") {
  SimConfig cfg = default_config();
  cfg.link.bio_dt_s = 0.00071;  // not a multiple of the fast step
  CHECK_THROWS_AS(finalize_config(cfg), ConfigError);
  cfg = default_config();
  cfg.gate.cutoff_hz = 2000.0;  // above Nyquist of the 0.0005 s step
  CHECK_THROWS_AS(finalize_config(cfg), ConfigError);
  cfg = default_config();
  cfg.link.bit_duration_s = 10.3;  // not a multiple of bio_dt
  CHECK_THROWS_AS(finalize_config(cfg), ConfigError);
}

TEST_CASE("overrides parse and apply by key") {
  SimConfig cfg = default_config();
  apply_override(cfg, "channel.freq_mean_hz", "650");
  apply_override(cfg, "link.reset_between_bits", "false");
  finalize_config(cfg);
  CHECK(cfg.source.freq_mean_hz == doctest::Approx(650.0));
  CHECK(cfg.link.reset_between_bits == false);
  CHECK_THROWS_AS(apply_override(cfg, "no.such_key", "1"), ConfigError);
}

TEST_CASE("shared fields propagate into the module parameter blocks") {
  SimConfig cfg = default_config();
  cfg.link.bio_dt_s = 0.25;
  finalize_config(cfg);
  CHECK(cfg.gate.bio_dt_s == doctest::Approx(0.25));
  CHECK(cfg.hub.bio_dt_s == doctest::Approx(0.25));
}

TEST_CASE("trace CSV roundtrips through files") {
  PressureTrace t{0.0, 0.002, {1.0, -2.5, 3.25, 0.0, 1e-7}};
  const std::string path = temp_path("trace_roundtrip.csv");
  export_trace_csv(t, path);
  PressureTrace back = import_trace_csv(path);
  REQUIRE(back.size() == t.size());
  CHECK(back.dt == doctest::Approx(t.dt));
  for (std::size_t i = 0; i < t.size(); ++i) {
    CHECK(back.samples[i] == doctest::Approx(t.samples[i]).epsilon(1e-8));
  }
  std::remove(path.c_str());
}

TEST_CASE("number formatting is deterministic") {
  CHECK(csv_number(1.0) == csv_number(1.0));
  CHECK(csv_number(0.1) == csv_number(0.1));
  CHECK(csv_number(1.23456789e-13) == csv_number(1.23456789e-13));
}
