#include "doctest.h"

#include <cmath>

#include "infotherm/landauer.hpp"
#include "infotherm/rng.hpp"

using namespace infotherm;
using namespace infotherm::landauer;
using doctest::Approx;

TEST_CASE("device_temperature") {
  // 1e-12 / (1.380649e-23 * 1e9 * ln 2) = 104.49397644795769
  const double t = device_temperature(1e-12, 1e9).value();
  CHECK(t == Approx(104.4939764479577).epsilon(1e-13));
  CHECK(device_temperature(2e-12, 1e9).value() == Approx(2 * t).epsilon(1e-15));
  CHECK(device_temperature(1e-12, 2e9).value() == Approx(t / 2).epsilon(1e-15));
  CHECK_THROWS_AS(device_temperature(0.0, 1e9), Error);
  CHECK_THROWS_AS(device_temperature(1e-12, -1.0), Error);
}

TEST_CASE("max_bit_rate") {
  // 40-digit reference: 34831325482.652564
  const double f = max_bit_rate(1e-9, 300.0, 10.0);
  CHECK(f == Approx(3.4831325482652564e10).epsilon(1e-13));
  CHECK(std::abs(f - 3.483e10) / 3.483e10 < 1e-3);

  const double f1 = max_bit_rate(1e-9, 300.0, 1.0);
  CHECK(f1 * 1.380649e-23 * 300.0 * kLn2 == Approx(1e-9).epsilon(1e-12));
  CHECK(max_bit_rate(1e-30, 300.0) < 1e-6);

  CHECK_THROWS_AS(max_bit_rate(1e-9, 300.0, 0.5), Error);
  CHECK_THROWS_AS(max_bit_rate(-1e-9, 300.0), Error);
  CHECK_THROWS_AS(max_bit_rate(1e-9, 0.0), Error);
}

TEST_CASE("bound consistency over random inputs") {
  Rng rng(17);
  for (int i = 0; i < 2000; ++i) {
    const double P = std::pow(10.0, -15.0 + 15.0 * rng.uniform());
    const double Tn = 1.0 + 1000.0 * rng.uniform();
    const double m = 1.0 + 99.0 * rng.uniform();
    const double T = device_temperature(P, max_bit_rate(P, Tn, m)).value();
    CHECK(std::abs(T - m * Tn) / (m * Tn) < 1e-12);
    const double floor = P / max_bit_rate(P, Tn, 1.0);
    CHECK(std::abs(floor - landauer_floor(Tn)) / landauer_floor(Tn) < 1e-12);
  }
}

TEST_CASE("evaluate") {
  const auto r = evaluate({1e-9, 300.0, 10.0, std::nullopt});
  CHECK_FALSE(r.verdict.has_value());
  CHECK(r.energy_per_bit_at_max == Approx(10.0 * r.landauer_energy_per_bit).epsilon(1e-12));

  const auto ok = evaluate({1e-9, 300.0, 10.0, 1e10});
  CHECK(ok.verdict == Verdict::satisfied);
  CHECK(*ok.device_temperature > 3000.0);
  const auto fast = evaluate({1e-9, 300.0, 10.0, 1e11});
  CHECK(fast.verdict == Verdict::violated);

  CHECK_THROWS_AS(evaluate({1e-9, 300.0, 10.0, 0.0}), Error);
}
