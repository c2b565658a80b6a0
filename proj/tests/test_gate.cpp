#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <vector>

#include "rootcomm/gate.hpp"

using namespace rootcomm;

namespace {

// Amplitude of a steady-state sine after the filter, ignoring the transient.
double tone_gain(double f_hz, double cutoff_hz, int order, double fs) {
  const double dt = 1.0 / fs;
  const int n = static_cast<int>(fs * 4.0);
  PressureTrace t{0.0, dt, {}};
  t.samples.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    t.samples[static_cast<std::size_t>(i)] = std::sin(2.0 * 3.14159265358979 * f_hz * i * dt);
  }
  PressureTrace y = lowpass(t, cutoff_hz, order);
  double peak = 0.0;
  for (std::size_t i = t.size() / 2; i < t.size(); ++i) {
    peak = std::max(peak, std::fabs(y.samples[i]));
  }
  return peak;
}

}  // namespace

TEST_CASE("low-pass has unit DC gain with no startup transient") {
  PressureTrace t{0.0, 0.0005, std::vector<double>(100, 4.2)};
  for (int order : {1, 2, 3, 4}) {
    PressureTrace y = lowpass(t, 250.0, order);
    for (double v : y.samples) CHECK(v == doctest::Approx(4.2).epsilon(1e-12));
  }
}

TEST_CASE("low-pass magnitude matches the analog response") {
  // Measured at 20 kHz sampling where bilinear warping is negligible.
  CHECK(tone_gain(50.0, 250.0, 2, 20000.0) >= 0.97);
  CHECK(tone_gain(1000.0, 250.0, 2, 20000.0) ==
        doctest::Approx(1.0 / std::sqrt(1.0 + std::pow(1000.0 / 250.0, 4.0))).epsilon(0.02));
}

TEST_CASE("low-pass rejects out-of-range cutoffs") {
  PressureTrace t{0.0, 0.0005, std::vector<double>(10, 0.0)};
  CHECK_THROWS_AS((void)lowpass(t, 0.0, 2), std::invalid_argument);
  CHECK_THROWS_AS((void)lowpass(t, 1000.0, 2), std::invalid_argument);  // Nyquist
  CHECK_THROWS_AS((void)lowpass(t, 250.0, 0), std::invalid_argument);
}

TEST_CASE("biological downsampling takes window means") {
  PressureTrace t{0.0, 0.25, {1.0, 3.0, 5.0, 7.0, 2.0, 2.0, 2.0, 2.0}};
  std::vector<double> bio = downsample_bio(t, 1.0);
  REQUIRE(bio.size() == 2);
  CHECK(bio[0] == doctest::Approx(4.0));
  CHECK(bio[1] == doctest::Approx(2.0));
  CHECK_THROWS_AS((void)downsample_bio(t, 0.3), std::invalid_argument);
}

TEST_CASE("open probability matches hand evaluation and stays clamped") {
  GateParams p;
  CHECK(open_probability(150.0, 0.0, p) == doctest::Approx(0.011024).epsilon(1e-4));
  CHECK(open_probability(150.0, p.sigma_half_mmhg, p) ==
        doctest::Approx(0.493623).epsilon(1e-4));
  // Saturating both logistic terms would exceed 1 through the scale factor.
  CHECK(open_probability(4000.0, 4000.0, p) == doctest::Approx(1.0));
  CHECK(open_probability(-4000.0, -4000.0, p) >= 0.0);
}

TEST_CASE("gate current at rest matches hand evaluation") {
  GateParams p;
  CHECK(gate_current(0.0, p, 150.0) == doctest::Approx(-4.283612e-13).epsilon(1e-5));
}

TEST_CASE("gate current grows in magnitude with stress") {
  GateParams p;
  double prev = std::fabs(gate_current(0.0, p, 150.0));
  for (double s = 10.0; s <= 100.0; s += 10.0) {
    const double mag = std::fabs(gate_current(s, p, 150.0));
    CHECK(mag > prev);
    prev = mag;
  }
}

TEST_CASE("resting influx matches hand evaluation in the literal form") {
  GateParams p;
  const double p0 = open_probability(150.0, 0.0, p);
  const double i = gate_current(0.0, p, 150.0);
  CHECK(influx_concentration(i, p0, p, 0.5) == doctest::Approx(4.722459).epsilon(1e-4));
}

TEST_CASE("dimensional influx divides by the Faraday constant") {
  GateParams p;
  const double i = gate_current(0.0, p, 150.0);
  const double literal = influx_concentration(i, 1.0, p, 0.5);
  p.dimensional_influx = true;
  CHECK(influx_concentration(i, 1.0, p, 0.5) ==
        doctest::Approx(literal / 96485.0).epsilon(1e-12));
}

TEST_CASE("baseline-subtracted influx vanishes at zero stress") {
  GateParams p;
  CHECK(gate_influx_step(0.0, 150.0, p) == 0.0);
  CHECK(gate_influx_step(1.0, 150.0, p) > 0.0);
}

TEST_CASE("influx response shapes: impulse, step, slow cosine") {
  GateParams p;
  auto influx_series = [&](const std::vector<double>& sigma) {
    std::vector<double> c_m(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      c_m[i] = gate_influx_step(sigma[i], 150.0, p);
    }
    return c_m;
  };

  // Impulse: one nonzero window -> exactly one nonzero influx sample.
  std::vector<double> impulse(40, 0.0);
  impulse[10] = 50.0;
  auto ci = influx_series(impulse);
  int nonzero = 0;
  for (double v : ci) nonzero += v > 0.0;
  CHECK(nonzero == 1);
  CHECK(ci[10] > 0.0);

  // Step: influx steps up and holds at a constant level.
  std::vector<double> step(40, 0.0);
  for (std::size_t i = 10; i < step.size(); ++i) step[i] = 50.0;
  auto cs = influx_series(step);
  for (std::size_t i = 0; i < 10; ++i) CHECK(cs[i] == 0.0);
  for (std::size_t i = 10; i < cs.size(); ++i) {
    CHECK(cs[i] == doctest::Approx(cs[10]));
    CHECK(cs[i] > 0.0);
  }

  // Slow cosine at 0.08 Hz (12.5 s period, bio step 0.5 s): rectified
  // periodic influx — one burst per period.
  const double period_s = 12.5;
  const int steps_per_period = 25;
  std::vector<double> cosine(100);
  for (std::size_t i = 0; i < cosine.size(); ++i) {
    cosine[i] = 50.0 * std::cos(2.0 * 3.14159265358979 * (i * 0.5) / period_s);
  }
  auto cc = influx_series(cosine);
  // Negative half-cycles are cut off entirely.
  int zero_runs = 0;
  bool in_zero = false;
  for (double v : cc) {
    if (v == 0.0 && !in_zero) {
      ++zero_runs;
      in_zero = true;
    } else if (v > 0.0) {
      in_zero = false;
    }
  }
  CHECK(zero_runs == 4);  // four rectified gaps in 100 steps
  // Periodicity of the positive bursts.
  for (std::size_t i = 0; i + steps_per_period < cc.size(); ++i) {
    CHECK(cc[i] == doctest::Approx(cc[i + steps_per_period]).epsilon(1e-9));
  }
}
