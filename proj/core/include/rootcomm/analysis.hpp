// Spectral and correlation analysis: Welch power spectral density, STFT
// spectrogram magnitudes, and biased normalized cross-correlation.
#pragma once

#include <vector>

#include "rootcomm/trace.hpp"

namespace rootcomm {

struct PsdResult {
  std::vector<double> freq_hz;
  std::vector<double> power;  // one-sided density, unit^2/Hz
};

struct SpectrogramResult {
  std::vector<double> time_s;                  // segment centers
  std::vector<double> freq_hz;                 // bin frequencies
  std::vector<std::vector<double>> magnitude;  // [segment][bin]
};

struct XcorrResult {
  std::vector<double> lag_s;
  std::vector<double> correlation;
};

// Welch periodogram: Hann window, 50% overlap; the trace must contain at
// least one full segment.
PsdResult welch_psd(const PressureTrace& trace, int segment = 4096);

SpectrogramResult spectrogram(const PressureTrace& trace, int segment = 4096);

// Biased normalized cross-correlation (mean-removed, 1/N scaling) over lags
// up to +-max_lag_s; equal sampling rates required. Positive lag means y is
// delayed relative to x.
XcorrResult xcorr_biased(const PressureTrace& x, const PressureTrace& y,
                         double max_lag_s = 1.0);

// Least-squares slope of log10(power) vs log10(freq) over [f_lo, f_hi].
double psd_loglog_slope(const PsdResult& psd, double f_lo, double f_hi);

// Frequency of the maximum-power bin.
double psd_peak_freq(const PsdResult& psd);

}  // namespace rootcomm
