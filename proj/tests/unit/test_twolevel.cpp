#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "infotherm/twolevel.hpp"

using namespace infotherm;
using namespace infotherm::twolevel;
using doctest::Approx;

namespace {

// Counts n-subsets of L positions by walking every L-bit mask.
std::uint64_t enumerate_placements(int L, int n) {
  std::uint64_t count = 0;
  for (std::uint32_t mask = 0; mask < (1u << L); ++mask) {
    if (__builtin_popcount(mask) == n) ++count;
  }
  return count;
}

// ln C(L, n) as sum ln i in long double, independent of log-gamma.
long double log_binomial_sum(std::int64_t L, std::int64_t n) {
  long double s = 0.0L;
  for (std::int64_t i = n + 1; i <= L; ++i) s += std::log(static_cast<long double>(i));
  for (std::int64_t i = 2; i <= L - n; ++i) s -= std::log(static_cast<long double>(i));
  return s;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an infotherm::Error");
  return ErrorCode::invalid_argument;
}

TwoLevelGas gas(std::int64_t L, std::int64_t n) { return {L, n, Energy(1.0)}; }

}  // namespace

TEST_CASE("log_multiplicity examples") {
  CHECK(enumerate_placements(6, 2) == 15);
  CHECK(log_multiplicity(6, 2) == Approx(2.708050201102210).epsilon(1e-14));
  CHECK(log_multiplicity(37, 0) == 0.0);
  // 40-digit reference: 689.46726156785118007550885511272
  CHECK(log_multiplicity(1000, 500) == Approx(689.4672615678512).epsilon(1e-13));
  CHECK(static_cast<double>(log_binomial_sum(1000, 500)) ==
        Approx(log_multiplicity(1000, 500)).epsilon(1e-12));
}

TEST_CASE("log_multiplicity matches enumeration for L <= 20") {
  for (int L = 1; L <= 20; ++L) {
    for (int n = 0; n <= L; ++n) {
      const auto count = enumerate_placements(L, n);
      const double lm = log_multiplicity(L, n);
      CHECK(static_cast<std::uint64_t>(std::llround(std::exp(lm))) == count);
      const double exact = std::log(static_cast<double>(count));
      if (exact == 0.0) {
        CHECK(lm == 0.0);
      } else {
        CHECK(std::abs(lm - exact) / exact < 1e-12);
      }
    }
  }
}

TEST_CASE("log_multiplicity agrees with long-double summation beyond the direct-sum limit") {
  for (std::int64_t L : {130, 500, 2000}) {
    for (std::int64_t n : {L / 7, L / 3, L / 2}) {
      const auto ref = static_cast<double>(log_binomial_sum(L, n));
      CHECK(log_multiplicity(L, n) == Approx(ref).epsilon(1e-12));
    }
  }
}

TEST_CASE("log_multiplicity rejects bad input") {
  CHECK(code_of([] { log_multiplicity(10, 11); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { log_multiplicity(10, -1); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { log_multiplicity(0, 0); }) == ErrorCode::invalid_argument);
}

TEST_CASE("entropy_exact") {
  CHECK(entropy_exact(gas(6, 2)).value() == Approx(2.70805).epsilon(1e-5));
  CHECK(entropy_exact(gas(10, 0)).value() == 0.0);
  CHECK(entropy_exact(gas(10, 10)).value() == 0.0);
  CHECK_THROWS_AS(entropy_exact({10, 3, Energy(0.0)}), Error);
}

TEST_CASE("entropy symmetry and unimodality for L <= 200") {
  for (std::int64_t L = 1; L <= 200; ++L) {
    for (std::int64_t n = 0; n <= L; ++n) {
      CHECK(entropy_exact(gas(L, n)).value() == entropy_exact(gas(L, L - n)).value());
      if (2 * (n + 1) <= L) {
        CHECK(entropy_exact(gas(L, n + 1)).value() > entropy_exact(gas(L, n)).value());
      }
      if (2 * n >= L && n + 1 <= L) {
        CHECK(entropy_exact(gas(L, n + 1)).value() < entropy_exact(gas(L, n)).value());
      }
    }
  }
}

TEST_CASE("entropy_stirling") {
  CHECK(entropy_stirling(gas(1000, 500)).value() == Approx(1000 * kLn2).epsilon(1e-13));
  const auto rel = [](std::int64_t L) {
    const double ex = entropy_exact(gas(L, L / 2)).value();
    return (entropy_stirling(gas(L, L / 2)).value() - ex) / ex;
  };
  // 40-digit references: 5.3373368e-3 and 1.0291639e-5.
  CHECK(rel(1000) == Approx(5.337336806574368e-3).epsilon(1e-9));
  CHECK(rel(1'000'000) < 2e-5);
  CHECK(rel(1'000'000) == Approx(1.029163862680757e-5).epsilon(1e-6));
  CHECK(code_of([] { entropy_stirling(gas(10, 0)); }) == ErrorCode::out_of_range);
  CHECK(code_of([] { entropy_stirling(gas(10, 10)); }) == ErrorCode::out_of_range);
}

TEST_CASE("temperature_closed") {
  // 1 / ln 9
  CHECK(temperature_closed(gas(1000, 100)).value() == Approx(0.4551196133134187).epsilon(1e-14));
  CHECK(temperature_closed(gas(1000, 900)).value() ==
        Approx(-0.4551196133134187).epsilon(1e-14));
  CHECK(code_of([] { temperature_closed(gas(1000, 500)); }) ==
        ErrorCode::infinite_temperature);
  CHECK(code_of([] { temperature_closed(gas(1000, 0)); }) == ErrorCode::zero_temperature);
  CHECK(code_of([] { temperature_closed(gas(1000, 1000)); }) == ErrorCode::zero_temperature);
  CHECK(temperature_closed({1000, 100, Energy(2.0)}).value() ==
        Approx(2 * 0.4551196133134187).epsilon(1e-14));
}

TEST_CASE("temperature_numeric") {
  CHECK(temperature_numeric(gas(10'000, 1'000)).value() ==
        Approx(0.4551196133134187).epsilon(1e-3));
  CHECK(temperature_numeric(gas(10'000, 9'000)).value() ==
        Approx(-0.4551196133134187).epsilon(1e-3));
  CHECK(code_of([] { temperature_numeric(gas(20, 10)); }) == ErrorCode::infinite_temperature);
  CHECK(code_of([] { temperature_numeric(gas(20, 0)); }) == ErrorCode::zero_temperature);
  CHECK(code_of([] { temperature_numeric(gas(3, 1)); }) == ErrorCode::invalid_argument);
  // Boundary neighbours are allowed: S(0) and S(L) are both defined.
  CHECK(temperature_numeric(gas(100, 1)).value() > 0.0);
  CHECK(temperature_numeric(gas(100, 99)).value() < 0.0);
}

TEST_CASE("finite-difference temperature converges as 1/L") {
  for (std::int64_t L : {1'000, 10'000}) {
    for (std::int64_t n = L / 20; n <= 45 * L / 100; n += L / 100) {
      const double tc = temperature_closed(gas(L, n)).value();
      const double tn = temperature_numeric(gas(L, n)).value();
      CHECK(std::abs(tn - tc) / std::abs(tc) < 10.0 / static_cast<double>(L));
    }
  }
}

TEST_CASE("occupation_from_temperature") {
  // 1000 / (1 + e)
  CHECK(occupation_from_temperature(1000, Energy(1.0), Temperature(1.0)) ==
        Approx(268.9414213699951).epsilon(1e-14));
  CHECK(occupation_from_temperature(1000, Energy(1.0), Temperature(1e12)) == 500.0);
  CHECK(occupation_from_temperature(1000, Energy(1.0), Temperature(1e-12)) ==
        Approx(0.0).epsilon(1e-300));
  CHECK_THROWS_AS(occupation_from_temperature(1000, Energy(1.0), Temperature(0.0)), Error);
}

TEST_CASE("occupation inverts the closed-form temperature") {
  const std::int64_t L = 10'000;
  for (std::int64_t n = L / 100; n <= 99 * L / 100; n += 37) {
    if (2 * n == L || (n > 49 * L / 100 && n < 51 * L / 100)) continue;
    const Temperature T = temperature_closed(gas(L, n));
    const double back = occupation_from_temperature(L, Energy(1.0), T);
    CHECK(std::abs(back - static_cast<double>(n)) / static_cast<double>(n) < 1e-9);
  }
}

TEST_CASE("transfer_balance") {
  const auto r = transfer_balance(1000, 300, 100, Energy(1.0));
  // 300 (ln 9 - ln(7/3)); 40-digit value 404.97801508470473
  CHECK(r.net.value() == Approx(404.9780150847047).epsilon(1e-12));
  CHECK(r.net.value() == Approx(404.96).epsilon(1e-3));
  CHECK(r.gas_heat.value() == 300.0);
  CHECK(r.verdict == Verdict::satisfied);
  CHECK(std::abs(r.net.value() - r.clausius_lower_bound.value()) < 1e-9);

  const auto same = transfer_balance(1000, 200, 200, Energy(1.0));
  CHECK(same.net.value() == 0.0);
  CHECK(same.verdict == Verdict::satisfied);

  CHECK(code_of([] { transfer_balance(1000, 100, 300, Energy(1.0)); }) ==
        ErrorCode::invalid_argument);
  CHECK(code_of([] { transfer_balance(1000, 500, 100, Energy(1.0)); }) ==
        ErrorCode::infinite_temperature);
  CHECK(code_of([] { transfer_balance(1000, 300, 0, Energy(1.0)); }) ==
        ErrorCode::invalid_argument);
}

TEST_CASE("transfer_balance net is non-negative on a grid") {
  const std::int64_t L = 120;
  for (std::int64_t nh = 1; nh < L; ++nh) {
    for (std::int64_t nc = 1; nc <= nh; ++nc) {
      if (2 * nh == L || 2 * nc == L) continue;
      const auto r = transfer_balance(L, nh, nc, Energy(1.0));
      CHECK(r.net.value() >= 0.0);
      CHECK(r.verdict == Verdict::satisfied);
    }
  }
}

TEST_CASE("metropolis_sample") {
  const McConfig cfg{200'000, 20'000, 42, Energy(1.0)};
  const auto a = metropolis_sample(2'000, Energy(1.0), cfg);
  const auto b = metropolis_sample(2'000, Energy(1.0), cfg);
  CHECK(a.mean_n == b.mean_n);
  CHECK(a.standard_error == b.standard_error);
  CHECK(a.final_n == b.final_n);
  CHECK(a.samples == 180'000);
  CHECK(a.mean_n / 2000.0 == Approx(0.2689).epsilon(0.04));

  const auto frozen = metropolis_sample(1'000, Energy(1.0), {50'000, 5'000, 3, Energy(1e-12)});
  CHECK(frozen.mean_n == 0.0);
  CHECK(frozen.max_n == 0);

  CHECK_THROWS_AS(metropolis_sample(5, Energy(1.0), cfg), Error);
  CHECK_THROWS_AS(metropolis_sample(100, Energy(1.0), {100, 100, 1, Energy(1.0)}), Error);
  CHECK_THROWS_AS(metropolis_sample(100, Energy(1.0), {100, 10, 1, Energy(0.0)}), Error);
}
