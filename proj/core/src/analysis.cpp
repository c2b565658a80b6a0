#include "rootcomm/analysis.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace rootcomm {
namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

std::vector<double> hann_window(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / (n - 1)));
  }
  return w;
}

// Shared segment machinery for PSD and spectrogram.
struct SegmentFft {
  int segment;
  std::vector<double> window;
  double* in;
  fftw_complex* out;
  fftw_plan plan;

  explicit SegmentFft(int seg)
      : segment(seg),
        window(hann_window(seg)),
        in(fftw_alloc_real(seg)),
        out(fftw_alloc_complex(seg / 2 + 1)),
        plan(fftw_plan_dft_r2c_1d(seg, in, out, FFTW_ESTIMATE)) {}
  ~SegmentFft() {
    fftw_destroy_plan(plan);
    fftw_free(in);
    fftw_free(out);
  }
  SegmentFft(const SegmentFft&) = delete;
  SegmentFft& operator=(const SegmentFft&) = delete;

  void run(const double* data) {
    for (int i = 0; i < segment; ++i) in[i] = data[i] * window[i];
    fftw_execute(plan);
  }
};

}  // namespace

PsdResult welch_psd(const PressureTrace& trace, int segment) {
  const int n = static_cast<int>(trace.samples.size());
  if (n < segment || segment < 8) {
    throw std::invalid_argument("welch_psd: trace shorter than one segment");
  }
  const int hop = segment / 2;
  const int n_segments = 1 + (n - segment) / hop;
  const int n_bins = segment / 2 + 1;
  const double fs = 1.0 / trace.dt;

  SegmentFft fft(segment);
  double window_power = 0.0;
  for (double w : fft.window) window_power += w * w;

  PsdResult result;
  result.freq_hz.resize(n_bins);
  result.power.assign(n_bins, 0.0);
  for (int b = 0; b < n_bins; ++b) result.freq_hz[b] = fs * b / segment;

  for (int s = 0; s < n_segments; ++s) {
    fft.run(trace.samples.data() + static_cast<std::size_t>(s) * hop);
    for (int b = 0; b < n_bins; ++b) {
      const double re = fft.out[b][0];
      const double im = fft.out[b][1];
      result.power[b] += re * re + im * im;
    }
  }
  const double norm = 1.0 / (fs * window_power * n_segments);
  for (int b = 0; b < n_bins; ++b) {
    double scale = norm;
    if (b != 0 && b != n_bins - 1) scale *= 2.0;  // one-sided
    result.power[b] *= scale;
  }
  return result;
}

SpectrogramResult spectrogram(const PressureTrace& trace, int segment) {
  const int n = static_cast<int>(trace.samples.size());
  if (n < segment || segment < 8) {
    throw std::invalid_argument("spectrogram: trace shorter than one segment");
  }
  const int hop = segment / 2;
  const int n_segments = 1 + (n - segment) / hop;
  const int n_bins = segment / 2 + 1;
  const double fs = 1.0 / trace.dt;

  SegmentFft fft(segment);
  SpectrogramResult result;
  result.freq_hz.resize(n_bins);
  for (int b = 0; b < n_bins; ++b) result.freq_hz[b] = fs * b / segment;
  result.time_s.resize(n_segments);
  result.magnitude.assign(n_segments, std::vector<double>(n_bins, 0.0));

  for (int s = 0; s < n_segments; ++s) {
    result.time_s[s] = trace.t0 + (static_cast<double>(s) * hop + segment / 2.0) * trace.dt;
    fft.run(trace.samples.data() + static_cast<std::size_t>(s) * hop);
    for (int b = 0; b < n_bins; ++b) {
      const double re = fft.out[b][0];
      const double im = fft.out[b][1];
      result.magnitude[s][b] = std::sqrt(re * re + im * im);
    }
  }
  return result;
}

XcorrResult xcorr_biased(const PressureTrace& x, const PressureTrace& y, double max_lag_s) {
  if (x.dt != y.dt || x.samples.size() != y.samples.size() || x.samples.empty()) {
    throw std::invalid_argument("xcorr_biased: traces must share dt and length");
  }
  const int n = static_cast<int>(x.samples.size());
  int max_lag = static_cast<int>(std::llround(max_lag_s / x.dt));
  if (max_lag >= n) max_lag = n - 1;

  const double mx = trace_mean(x);
  const double my = trace_mean(y);
  double sx = 0.0, sy = 0.0;
  for (int i = 0; i < n; ++i) {
    sx += (x.samples[i] - mx) * (x.samples[i] - mx);
    sy += (y.samples[i] - my) * (y.samples[i] - my);
  }
  const double denom = std::sqrt(sx * sy);

  XcorrResult result;
  result.lag_s.reserve(2 * max_lag + 1);
  result.correlation.reserve(2 * max_lag + 1);
  for (int lag = -max_lag; lag <= max_lag; ++lag) {
    double acc = 0.0;
    const int lo = lag < 0 ? -lag : 0;
    const int hi = lag < 0 ? n : n - lag;
    for (int i = lo; i < hi; ++i) {
      acc += (x.samples[i] - mx) * (y.samples[i + lag] - my);
    }
    result.lag_s.push_back(lag * x.dt);
    result.correlation.push_back(denom > 0.0 ? acc / denom : 0.0);
  }
  return result;
}

double psd_loglog_slope(const PsdResult& psd, double f_lo, double f_hi) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::size_t i = 0; i < psd.freq_hz.size(); ++i) {
    const double f = psd.freq_hz[i];
    if (f < f_lo || f > f_hi || psd.power[i] <= 0.0) continue;
    const double lx = std::log10(f);
    const double ly = std::log10(psd.power[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  if (n < 2) throw std::invalid_argument("psd_loglog_slope: too few bins in band");
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double psd_peak_freq(const PsdResult& psd) {
  double best_f = 0.0, best_p = -1.0;
  for (std::size_t i = 0; i < psd.freq_hz.size(); ++i) {
    if (psd.power[i] > best_p) {
      best_p = psd.power[i];
      best_f = psd.freq_hz[i];
    }
  }
  return best_f;
}

}  // namespace rootcomm
