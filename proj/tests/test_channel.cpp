#include <doctest.h>

#include <initializer_list>

#include <stdexcept>

#include <cmath>

#include "rootcomm/analysis.hpp"
#include "rootcomm/channel.hpp"
#include "rootcomm/rng.hpp"

using namespace rootcomm;

TEST_CASE("damping ratio at 200 Hz matches hand evaluation") {
  SoilMedium medium;
  CHECK(damping_ratio(medium, 200.0) == doctest::Approx(0.266774).epsilon(1e-4));
}

TEST_CASE("wave numbers at 200 Hz match hand evaluation") {
  SoilMedium medium;
  WaveNumbers wn = wave_numbers(medium, 200.0);
  CHECK(wn.k1 == doctest::Approx(26.650435).epsilon(1e-5));
  CHECK(wn.k2 == doctest::Approx(6.664965).epsilon(1e-5));
}

TEST_CASE("lossless limit: zero viscosity removes attenuation") {
  SoilMedium medium;
  medium.viscosity_pa_s = 0.0;
  WaveNumbers wn = wave_numbers(medium, 200.0);
  CHECK(wn.k2 == doctest::Approx(0.0));
  const double omega = 2.0 * 3.14159265358979 * 200.0;
  CHECK(wn.k1 ==
        doctest::Approx(omega * std::sqrt(medium.rho_si() / medium.g_si())).epsilon(1e-9));
}

TEST_CASE("wave numbers reject nonpositive frequency") {
  SoilMedium medium;
  CHECK_THROWS_AS((void)wave_numbers(medium, 0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)wave_numbers(medium, -5.0), std::invalid_argument);
}

TEST_CASE("attenuation coefficient increases with frequency") {
  SoilMedium medium;
  double prev = 0.0;
  for (double f = 50.0; f <= 1000.0; f += 25.0) {
    WaveNumbers wn = wave_numbers(medium, f);
    CHECK(wn.k1 >= 0.0);
    CHECK(wn.k2 > prev);
    prev = wn.k2;
  }
}

TEST_CASE("synthesis is deterministic for a fixed seed") {
  SoilMedium medium;
  SourceSpec spec;
  RngStream a(11, 0), b(11, 0);
  PressureTrace ta = synthesize_received(medium, spec, 1.0, 0.5, 0.0005, a);
  PressureTrace tb = synthesize_received(medium, spec, 1.0, 0.5, 0.0005, b);
  REQUIRE(ta.size() == tb.size());
  for (std::size_t i = 0; i < ta.size(); ++i) CHECK(ta.samples[i] == tb.samples[i]);
}

TEST_CASE("peak amplitude decays with distance") {
  SoilMedium medium;
  SourceSpec spec;
  auto peak = [](const PressureTrace& t) {
    double m = 0.0;
    for (double v : t.samples) m = std::max(m, std::fabs(v));
    return m;
  };
  RngStream a(11, 0), b(11, 0);
  PressureTrace near = synthesize_received(medium, spec, 1.0, 1.0, 0.0005, a);
  PressureTrace far = synthesize_received(medium, spec, 2.0, 1.0, 0.0005, b);
  CHECK(peak(far) <= peak(near));
}

TEST_CASE("lossless medium keeps amplitude independent of distance") {
  SoilMedium medium;
  medium.viscosity_pa_s = 0.0;
  SourceSpec spec;
  RngStream a(11, 0), b(11, 0);
  PressureTrace x1 = synthesize_received(medium, spec, 1.0, 2.0, 0.0005, a);
  PressureTrace x2 = synthesize_received(medium, spec, 3.0, 2.0, 0.0005, b);
  CHECK(trace_rms(x2) == doctest::Approx(trace_rms(x1)).epsilon(0.05));
}

TEST_CASE("synthesis validates arguments") {
  SoilMedium medium;
  SourceSpec spec;
  RngStream rng(1, 0);
  CHECK_THROWS_AS(
      (void)synthesize_received(medium, spec, -1.0, 1.0, 0.0005, rng),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)synthesize_received(medium, spec, 1.0, 0.0, 0.0005, rng),
      std::invalid_argument);
}

TEST_CASE("source spectrum peaks in band at the source") {
  // Attenuation grows with frequency, so the band check is made at x = 0
  // where the emitted spectrum is unshaped.
  SoilMedium medium;
  SourceSpec spec;
  RngStream rng(1, 0);
  PressureTrace t = synthesize_received(medium, spec, 0.0, 10.0, 0.0005, rng);
  PsdResult psd = welch_psd(t, 4096);
  const double peak = psd_peak_freq(psd);
  CHECK(peak >= spec.freq_mean_hz - spec.freq_std_hz);
  CHECK(peak <= spec.freq_mean_hz + spec.freq_std_hz);
}

TEST_CASE("pink noise hits the requested rms and spectral slope") {
  RngStream rng(7, 1);
  PressureTrace t = pink_noise(20.0, 0.0005, 2.5e-6, rng);
  CHECK(trace_rms(t) == doctest::Approx(2.5e-6).epsilon(1e-6));
  PsdResult psd = welch_psd(t, 8192);
  const double slope = psd_loglog_slope(psd, 2.0, 500.0);
  CHECK(slope > -1.3);
  CHECK(slope < -0.7);
  // Long-run mean shrinks toward zero.
  CHECK(std::fabs(trace_mean(t)) <
        3.0 * trace_rms(t) / std::sqrt(static_cast<double>(t.size())));
}

TEST_CASE("zero-rms pink noise is identically zero") {
  RngStream rng(7, 1);
  PressureTrace t = pink_noise(1.0, 0.0005, 0.0, rng);
  for (double v : t.samples) CHECK(v == 0.0);
}

TEST_CASE("received stress rectifies the superposition") {
  PressureTrace sig{0.0, 0.001, std::vector<double>(100, -5.0)};
  PressureTrace zero{0.0, 0.001, std::vector<double>(100, 0.0)};
  PressureTrace s = received_stress(sig, zero);
  for (double v : s.samples) CHECK(v == doctest::Approx(5.0));
  PressureTrace z = received_stress(zero, zero);
  for (double v : z.samples) CHECK(v == 0.0);
}
