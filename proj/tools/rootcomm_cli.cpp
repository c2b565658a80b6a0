// Command-line front end: single-run simulation, BER parameter sweeps, and
// offline trace analysis (PSD / spectrogram / cross-correlation), all CSV in
// and out. Exit codes: 0 success, 2 configuration error, 3 numeric abort.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rootcomm/analysis.hpp"
#include "rootcomm/chain.hpp"
#include "rootcomm/config.hpp"
#include "rootcomm/csv.hpp"
#include "rootcomm/errors.hpp"
#include "rootcomm/grid.hpp"
#include "rootcomm/link.hpp"

namespace {

using namespace rootcomm;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

SimConfig load_or_default(const std::string& config_path) {
  if (config_path.empty()) {
    SimConfig cfg = default_config();
    finalize_config(cfg);
    return cfg;
  }
  return load_config(config_path);
}

void apply_cli_overrides(SimConfig& cfg, const std::vector<std::string>& sets) {
  for (const std::string& kv : sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--set expects key=value, got: " + kv);
    }
    apply_override(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  finalize_config(cfg);
}

int run_simulate(const std::string& config_path, std::uint64_t seed,
                 const std::string& out_dir, int bit,
                 const std::vector<std::string>& sets) {
  SimConfig cfg = load_or_default(config_path);
  apply_cli_overrides(cfg, sets);

  ChainResult r = run_chain(cfg, bit, seed, 0, /*keep_traces=*/true);

  export_trace_csv(r.received_pa, out_dir + "/received.csv");
  export_trace_csv(r.stress_pa, out_dir + "/stress.csv");
  export_trace_csv(r.gate_stress_mmhg_trace, out_dir + "/gate_stress.csv");

  std::vector<double> c_m_padded = r.c_m_nm;
  std::vector<double> sigma_padded = r.sigma_f_mmhg;
  c_m_padded.insert(c_m_padded.begin(), 0.0);
  sigma_padded.insert(sigma_padded.begin(), 0.0);
  export_columns_csv({{"t", r.t_bio_s},
                      {"sigma_f_mmhg", sigma_padded},
                      {"c_m_nm", c_m_padded},
                      {"c_c_nm", r.c_c_nm}},
                     out_dir + "/calcium.csv");
  export_columns_csv({{"t", r.t_bio_s}, {"h_mol_l", r.h_mol_l}},
                     out_dir + "/h2o2.csv");
  export_columns_csv({{"t", r.t_bio_s},
                      {"k_ac_mol_l", r.k_ac_mol_l},
                      {"p_a_mol_l", r.p_a_mol_l},
                      {"o_a_mol_l", r.o_a_mol_l}},
                     out_dir + "/cascade.csv");

  GridModifiers mods{r.delta_p_mod, r.omega_p_mod};
  AuxinGrid grid = build_grid(cfg.grid, mods);
  export_grid_cells_csv(grid, out_dir + "/grid_cells_initial.csv");
  run_grid(grid, cfg.grid, cfg.grid.steps);
  export_grid_cells_csv(grid, out_dir + "/grid_cells_final.csv");
  export_grid_faces_csv(grid, out_dir + "/grid_faces_final.csv");

  write_config(cfg, out_dir + "/config_effective.cfg");

  std::printf("apr=%s delta_p_mod=%s omega_p_mod=%s polarity_index=%s\n",
              csv_number(r.apr).c_str(), csv_number(r.delta_p_mod).c_str(),
              csv_number(r.omega_p_mod).c_str(),
              csv_number(polarity_index(grid)).c_str());
  return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& param_name,
              int runs, int bits, const std::string& out_dir,
              const std::vector<double>& values,
              const std::vector<std::string>& sets) {
  SimConfig cfg = load_or_default(config_path);
  apply_cli_overrides(cfg, sets);
  if (runs > 0) cfg.link.runs = runs;
  if (bits > 0) cfg.link.bits_per_run = bits;
  finalize_config(cfg);

  SweepParam param;
  if (param_name == "mean_freq") {
    param = SweepParam::kMeanFreq;
  } else if (param_name == "mean_amp") {
    param = SweepParam::kMeanAmp;
  } else if (param_name == "bit_duration") {
    param = SweepParam::kBitDuration;
  } else {
    throw ConfigError("unknown sweep parameter: " + param_name);
  }

  const std::vector<double> sweep_values =
      values.empty() ? default_sweep_values(param) : values;
  std::vector<SweepRow> rows = sweep(param, sweep_values, cfg);
  export_sweep_csv(rows, out_dir + "/sweep.csv");
  export_sweep_summary_csv(summarize_sweep(rows), out_dir + "/sweep_summary.csv");
  write_config(cfg, out_dir + "/config_effective.cfg");
  return kExitOk;
}

int run_analyze(const std::string& op, const std::string& in_path,
                const std::string& in2_path, const std::string& out_path) {
  PressureTrace trace = import_trace_csv(in_path);
  if (op == "psd") {
    const int seg = trace.size() >= 4096 ? 4096
                                         : static_cast<int>(trace.size());
    PsdResult psd = welch_psd(trace, seg);
    export_columns_csv({{"freq_hz", psd.freq_hz}, {"power", psd.power}}, out_path);
  } else if (op == "spectrogram") {
    const int seg = trace.size() >= 4096 ? 4096
                                         : static_cast<int>(trace.size());
    SpectrogramResult sg = spectrogram(trace, seg);
    std::FILE* f = std::fopen(out_path.c_str(), "w");
    if (!f) throw std::runtime_error("cannot open for writing: " + out_path);
    std::fputs("time_s,freq_hz,magnitude\n", f);
    for (std::size_t s = 0; s < sg.time_s.size(); ++s) {
      for (std::size_t b = 0; b < sg.freq_hz.size(); ++b) {
        std::fprintf(f, "%s,%s,%s\n", csv_number(sg.time_s[s]).c_str(),
                     csv_number(sg.freq_hz[b]).c_str(),
                     csv_number(sg.magnitude[s][b]).c_str());
      }
    }
    std::fclose(f);
  } else if (op == "xcorr") {
    if (in2_path.empty()) throw ConfigError("xcorr requires --in2");
    PressureTrace second = import_trace_csv(in2_path);
    XcorrResult xc = xcorr_biased(trace, second);
    export_columns_csv({{"lag_s", xc.lag_s}, {"correlation", xc.correlation}},
                       out_path);
  } else {
    throw ConfigError("unknown analyze op: " + op);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Root acoustic-communication chain simulator"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".", param_name, op, in_path, in2_path,
              out_path;
  std::uint64_t seed = 1;
  int bit = 1, runs = 0, bits = 0;
  std::vector<double> values;
  std::vector<std::string> sets;

  CLI::App* sim = app.add_subcommand("simulate", "Single chain run, CSV outputs");
  sim->add_option("--config", config_path, "Config file (defaults built in)");
  sim->add_option("--seed", seed, "Random seed");
  sim->add_option("--out", out_dir, "Output directory")->required();
  sim->add_option("--bit", bit, "Transmit bit (1 = source on)");
  sim->add_option("--set", sets, "Override key=value (repeatable)");

  CLI::App* sw = app.add_subcommand("sweep", "BER sweep over a source/link parameter");
  sw->add_option("--param", param_name, "mean_freq | mean_amp | bit_duration")
      ->required();
  sw->add_option("--config", config_path, "Config file (defaults built in)");
  sw->add_option("--runs", runs, "Independent runs per sweep value");
  sw->add_option("--bits", bits, "Bits per run");
  sw->add_option("--values", values, "Sweep values (defaults per parameter)");
  sw->add_option("--out", out_dir, "Output directory")->required();
  sw->add_option("--set", sets, "Override key=value (repeatable)");

  CLI::App* an = app.add_subcommand("analyze", "PSD / spectrogram / xcorr of a trace CSV");
  an->add_option("--op", op, "psd | spectrogram | xcorr")->required();
  an->add_option("--in", in_path, "Input trace CSV (t,value)")->required();
  an->add_option("--in2", in2_path, "Second trace for xcorr");
  an->add_option("--out", out_path, "Output CSV")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) return run_simulate(config_path, seed, out_dir, bit, sets);
    if (sw->parsed()) return run_sweep(config_path, param_name, runs, bits, out_dir, values, sets);
    if (an->parsed()) return run_analyze(op, in_path, in2_path, out_path);
  } catch (const rootcomm::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const rootcomm::NumericError& e) {
    std::fprintf(stderr, "numeric abort: %s\n", e.what());
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitOk;
}
