#include <doctest.h>

#include <cmath>
#include <vector>

#include "rootcomm/rng.hpp"

using rootcomm::RngStream;

TEST_CASE("identical seed and stream reproduce the same sequence") {
  RngStream a(42, 7), b(42, 7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("different streams of one seed are distinct") {
  RngStream a(42, 0), b(42, 1);
  int same = 0;
  for (int i = 0; i < 256; ++i) {
    if (a.next_u64() == b.next_u64()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("different seeds are distinct on the same stream") {
  RngStream a(1, 3), b(2, 3);
  int same = 0;
  for (int i = 0; i < 256; ++i) {
    if (a.next_u64() == b.next_u64()) ++same;
  }
  CHECK(same == 0);
}

TEST_CASE("uniform lies in [0,1) with sane moments") {
  RngStream rng(9, 0);
  double sum = 0.0, sumsq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
    sumsq += u * u;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(mean == doctest::Approx(0.5).epsilon(0.01));
  CHECK(var == doctest::Approx(1.0 / 12.0).epsilon(0.05));
}

TEST_CASE("ranged uniform respects bounds") {
  RngStream rng(9, 1);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform(-3.0, 5.0);
    CHECK(u >= -3.0);
    CHECK(u < 5.0);
  }
}

TEST_CASE("gaussian consumes exactly two uniforms and has sane moments") {
  RngStream rng(17, 2);
  const auto c0 = rng.counter();
  (void)rng.gaussian(0.0, 1.0);
  CHECK(rng.counter() == c0 + 2);

  double sum = 0.0, sumsq = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian(2.0, 3.0);
    sum += g;
    sumsq += g * g;
  }
  const double mean = sum / n;
  const double var = sumsq / n - mean * mean;
  CHECK(mean == doctest::Approx(2.0).epsilon(0.02));
  CHECK(std::sqrt(var) == doctest::Approx(3.0).epsilon(0.02));
}

TEST_CASE("outputs are a pure function of the counter") {
  RngStream a(5, 11);
  std::vector<std::uint64_t> first;
  for (int i = 0; i < 50; ++i) first.push_back(a.next_u64());
  // Recreate and skip: the 50th draw must match regardless of access pattern.
  RngStream b(5, 11);
  for (int i = 0; i < 49; ++i) (void)b.next_u64();
  CHECK(b.next_u64() == first[49]);
}
