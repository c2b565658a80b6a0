#include "rootcomm/link.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "rootcomm/csv.hpp"
#include "rootcomm/errors.hpp"

namespace rootcomm {
namespace {

// Stream id reserved for transmitted-bit draws; chain streams use small
// multiples of the bit index, so this never collides.
constexpr std::uint64_t kBitStreamId = 0x4000000000000000ULL;

}  // namespace

int decide(double apr, double threshold) {
  return apr > threshold ? 1 : 0;
}

ChainResult run_bit(const SimConfig& cfg, int bit, std::uint64_t seed,
                    std::uint64_t bit_index, bool keep_traces) {
  return run_chain(cfg, bit, seed, bit_index, keep_traces);
}

std::vector<int> random_bits(int n, std::uint64_t seed) {
  RngStream rng(seed, kBitStreamId);
  std::vector<int> bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = rng.uniform() < 0.5 ? 0 : 1;
  return bits;
}

LinkReport run_link(const std::vector<int>& tx_bits, const SimConfig& cfg,
                    std::uint64_t seed) {
  if (tx_bits.empty()) throw std::invalid_argument("run_link: empty bit vector");
  LinkReport report;
  report.tx_bits = tx_bits;
  report.rx_bits.reserve(tx_bits.size());
  report.apr.reserve(tx_bits.size());

  ChainInit carry;
  bool have_carry = false;
  for (std::size_t i = 0; i < tx_bits.size(); ++i) {
    const ChainInit* init =
        (!cfg.link.reset_between_bits && have_carry) ? &carry : nullptr;
    ChainResult r = run_chain(cfg, tx_bits[i], seed, i, false, init);
    report.apr.push_back(r.apr);
    const int rx = decide(r.apr, cfg.link.threshold);
    report.rx_bits.push_back(rx);
    if (rx != tx_bits[i]) ++report.errors;
    if (!cfg.link.reset_between_bits) {
      carry.hub.c_c_nm = r.c_c_nm.back();
      carry.hub.h_mol_l = r.h_mol_l.back();
      carry.o_a_mol_l = r.o_a_mol_l.back();
      have_carry = true;
    }
  }
  report.ber = static_cast<double>(report.errors) / static_cast<double>(tx_bits.size());
  return report;
}

const char* sweep_param_name(SweepParam p) {
  switch (p) {
    case SweepParam::kMeanFreq: return "mean_freq";
    case SweepParam::kMeanAmp: return "mean_amp";
    case SweepParam::kBitDuration: return "bit_duration";
  }
  return "unknown";
}

std::vector<double> default_sweep_values(SweepParam p) {
  switch (p) {
    case SweepParam::kMeanFreq: return {200, 300, 400, 500, 600, 700, 800};
    case SweepParam::kMeanAmp: return {2, 5, 10, 20, 40};
    case SweepParam::kBitDuration: return {10, 50, 100, 150, 200};
  }
  return {};
}

std::vector<SweepRow> sweep(SweepParam param, const std::vector<double>& values,
                            const SimConfig& cfg) {
  if (values.empty()) throw std::invalid_argument("sweep: empty value list");
  std::vector<SweepRow> rows;
  rows.reserve(values.size() * static_cast<std::size_t>(cfg.link.runs));
  for (double value : values) {
    SimConfig point = cfg;
    switch (param) {
      case SweepParam::kMeanFreq: point.source.freq_mean_hz = value; break;
      case SweepParam::kMeanAmp: point.source.amp_mean_upa = value; break;
      case SweepParam::kBitDuration: point.link.bit_duration_s = value; break;
    }
    finalize_config(point);
    for (int run = 0; run < cfg.link.runs; ++run) {
      const std::uint64_t seed = cfg.link.base_seed + static_cast<std::uint64_t>(run);
      std::vector<int> tx = random_bits(cfg.link.bits_per_run, seed);
      LinkReport report = run_link(tx, point, seed);
      SweepRow row;
      row.param = param;
      row.value = value;
      row.run = run;
      row.bits = cfg.link.bits_per_run;
      row.errors = report.errors;
      row.ber = report.ber;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<SweepSummaryRow> summarize_sweep(const std::vector<SweepRow>& rows) {
  std::vector<SweepSummaryRow> summary;
  std::size_t i = 0;
  while (i < rows.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < rows.size() && rows[j].param == rows[i].param &&
           rows[j].value == rows[i].value) {
      sum += rows[j].ber;
      ++j;
    }
    const double n = static_cast<double>(j - i);
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t k = i; k < j; ++k) {
      ss += (rows[k].ber - mean) * (rows[k].ber - mean);
    }
    SweepSummaryRow s;
    s.param = rows[i].param;
    s.value = rows[i].value;
    s.mean_ber = mean;
    s.std_ber = n > 1.0 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    summary.push_back(s);
    i = j;
  }
  return summary;
}

void export_sweep_csv(const std::vector<SweepRow>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  std::fputs("param,value,run,bits,errors,ber\n", f);
  for (const SweepRow& r : rows) {
    std::fprintf(f, "%s,%s,%d,%d,%d,%s\n", sweep_param_name(r.param),
                 csv_number(r.value).c_str(), r.run, r.bits, r.errors,
                 csv_number(r.ber).c_str());
  }
  std::fclose(f);
}

void export_sweep_summary_csv(const std::vector<SweepSummaryRow>& rows,
                              const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  std::fputs("param,value,mean_ber,std_ber\n", f);
  for (const SweepSummaryRow& r : rows) {
    std::fprintf(f, "%s,%s,%s,%s\n", sweep_param_name(r.param),
                 csv_number(r.value).c_str(), csv_number(r.mean_ber).c_str(),
                 csv_number(r.std_ber).c_str());
  }
  std::fclose(f);
}

}  // namespace rootcomm
