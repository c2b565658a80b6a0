// Uniformly sampled time series of pressures/stresses (Pa or mmHg depending
// on the producing stage; each producer documents its unit).
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace rootcomm {

struct PressureTrace {
  double t0 = 0.0;              // time of first sample, s
  double dt = 0.0;              // sample spacing, s
  std::vector<double> samples;  // values

  std::size_t size() const { return samples.size(); }
  double time_at(std::size_t i) const { return t0 + dt * static_cast<double>(i); }
  double duration() const { return dt * static_cast<double>(samples.size()); }
};

inline double trace_rms(const PressureTrace& t) {
  if (t.samples.empty()) return 0.0;
  double acc = 0.0;
  for (double v : t.samples) acc += v * v;
  return std::sqrt(acc / static_cast<double>(t.samples.size()));
}

inline double trace_mean(const PressureTrace& t) {
  if (t.samples.empty()) return 0.0;
  double acc = 0.0;
  for (double v : t.samples) acc += v;
  return acc / static_cast<double>(t.samples.size());
}

}  // namespace rootcomm
