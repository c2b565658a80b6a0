// Digital-link layer: water-flow presence encoded as bits, one transduction
// chain run per bit interval, threshold decision on the active-PIN2 ratio,
// and bit-error-rate sweeps over source/link parameters.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rootcomm/chain.hpp"
#include "rootcomm/config.hpp"

namespace rootcomm {

struct LinkReport {
  std::vector<int> tx_bits;
  std::vector<int> rx_bits;
  std::vector<double> apr;
  int errors = 0;
  double ber = 0.0;
};

enum class SweepParam { kMeanFreq, kMeanAmp, kBitDuration };

struct SweepRow {
  SweepParam param;
  double value = 0.0;
  int run = 0;
  int bits = 0;
  int errors = 0;
  double ber = 0.0;
};

struct SweepSummaryRow {
  SweepParam param;
  double value = 0.0;
  double mean_ber = 0.0;
  double std_ber = 0.0;  // sample standard deviation across runs
};

// Threshold decision, strict inequality.
int decide(double apr, double threshold);

// Run one bit interval and decide it (state reset to baseline).
ChainResult run_bit(const SimConfig& cfg, int bit, std::uint64_t seed,
                    std::uint64_t bit_index, bool keep_traces = false);

// Equiprobable random bits from a dedicated RNG stream of `seed`.
std::vector<int> random_bits(int n, std::uint64_t seed);

// Simulate a full frame of tx_bits under one seed.
LinkReport run_link(const std::vector<int>& tx_bits, const SimConfig& cfg,
                    std::uint64_t seed);

const char* sweep_param_name(SweepParam p);
std::vector<double> default_sweep_values(SweepParam p);

// Per sweep value, `runs` independent links of `bits_per_run` random bits with
// seed_i = base_seed + i; returns one row per (value, run).
std::vector<SweepRow> sweep(SweepParam param, const std::vector<double>& values,
                            const SimConfig& cfg);

// Mean / sample std of BER per sweep value.
std::vector<SweepSummaryRow> summarize_sweep(const std::vector<SweepRow>& rows);

// CSV writers (headers: "param,value,run,bits,errors,ber" and
// "param,value,mean_ber,std_ber").
void export_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path);
void export_sweep_summary_csv(const std::vector<SweepSummaryRow>& rows,
                              const std::string& path);

}  // namespace rootcomm
