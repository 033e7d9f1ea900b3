#include "doctest.h"

#include <cmath>

#include "infotherm/bitstream.hpp"
#include "infotherm/ledger.hpp"

using namespace infotherm;
using namespace infotherm::ledger;
using bitstream::Equilibrium;
using doctest::Approx;

namespace {

bitstream::FileStats random_stats(std::int64_t L) {
  return {L, L / 2, 0.5, Information(L * kLn2), kLn2, 3, Equilibrium::random, 0.0};
}

}  // namespace

TEST_CASE("broadcast_balance for a random file") {
  const auto r = broadcast_balance(random_stats(100), Energy(1.0), 3);
  CHECK(r.net_gain.value() == 200.0 * kLn2);
  CHECK(r.net_gain.value() == Approx(138.6294361119891).epsilon(1e-14));
  CHECK(r.t_cold.value() * 3 == Approx(r.t_hot.value()).epsilon(1e-12));
  CHECK(r.entropy_removed.value() == Approx(100 * kLn2).epsilon(1e-15));
  CHECK(r.entropy_deposited.value() == Approx(300 * kLn2).epsilon(1e-15));
  CHECK(r.clausius_margin.value() == 0.0);
  CHECK(r.info_source == InfoSource::equilibrium);

  const auto one = broadcast_balance(random_stats(100), Energy(1.0), 1);
  CHECK(one.net_gain.value() == 0.0);

  CHECK_THROWS_AS(broadcast_balance(random_stats(100), Energy(1.0), 0), Error);
  CHECK_THROWS_AS(broadcast_balance(random_stats(100), Energy(0.0), 2), Error);
}

TEST_CASE("broadcast net gain cancels the temperature") {
  const auto stats = bitstream::analyze(bitstream::generate({bitstream::Markov{0.3}, 1 << 14, 2}));
  for (std::int64_t N : {1, 2, 5, 40}) {
    const double base = broadcast_balance(stats, Energy(1.0), N).net_gain.value();
    for (double eps : {0.5, 2.0}) {
      CHECK(broadcast_balance(stats, Energy(eps), N).net_gain.value() == base);
    }
  }
}

TEST_CASE("broadcast net gain grows with N") {
  double prev = -1.0;
  for (std::int64_t N = 1; N <= 50; ++N) {
    const double g = broadcast_balance(random_stats(256), Energy(1.0), N).net_gain.value();
    CHECK(g > prev);
    prev = g;
  }
}

TEST_CASE("non-random files carry a Clausius margin") {
  const std::int64_t L = 1 << 20;
  const auto markov = bitstream::analyze(bitstream::generate({bitstream::Markov{0.1}, L, 7}), 3);
  const auto b = broadcast_balance(markov, Energy(1.0), 2);
  CHECK(b.info_source == InfoSource::markov_rate);
  CHECK(b.clausius_margin.value() / static_cast<double>(L) ==
        Approx(kLn2 - 0.3250829733914482).epsilon(0.005 / 0.368));

  for (const bitstream::GeneratorKind& k :
       {bitstream::GeneratorKind{bitstream::OrderedBlock{}},
        bitstream::GeneratorKind{bitstream::Alternating{}},
        bitstream::GeneratorKind{bitstream::Markov{0.05}},
        bitstream::GeneratorKind{bitstream::Markov{0.3}}}) {
    const auto st = bitstream::analyze(bitstream::generate({k, 1 << 16, 9}), 3);
    CHECK(broadcast_balance(st, Energy(1.0), 4).clausius_margin.value() > 0.0);
  }

  const auto fair = bitstream::analyze(bitstream::generate({bitstream::Bernoulli{0.5}, L, 21}), 3);
  CHECK(broadcast_balance(fair, Energy(1.0), 2).clausius_margin.value() / static_cast<double>(L) <
        0.01);
}

TEST_CASE("broadcast falls back to the iid estimate on short streams") {
  const auto st = bitstream::analyze(bitstream::generate({bitstream::Alternating{}, 100, 0}), 3);
  CHECK_FALSE(st.info_rate_markov.has_value());
  const auto b = broadcast_balance(st, Energy(1.0), 2);
  CHECK(b.info_source == InfoSource::iid);
  CHECK(b.info_sent.nats() == Approx(100 * kLn2).epsilon(1e-15));
}

TEST_CASE("clausius_check") {
  const auto eq = clausius_check(Entropy(10.0), Information(10.0));
  CHECK(eq.verdict == Verdict::satisfied);
  CHECK(eq.margin.value() == 0.0);
  const auto bad = clausius_check(Entropy(5.0), Information(10.0));
  CHECK(bad.verdict == Verdict::violated);
  CHECK(bad.margin.value() == -5.0);

  // Receivers hold N k dI of entropy for N dI of absorbed information.
  const auto b = broadcast_balance(random_stats(100), Energy(1.0), 3);
  const auto recv = clausius_check(b.entropy_deposited, Information(3.0 * b.info_sent.nats()));
  CHECK(recv.verdict == Verdict::satisfied);
  CHECK(recv.margin.value() == Approx(0.0));
}

TEST_CASE("combined_balance") {
  const auto null = combined_balance(Energy(0.0), Temperature(3.0), Information(0.0), Entropy(0.0));
  CHECK(null.verdict == Verdict::satisfied);
  CHECK(null.entropy_lower_bound.value() == 0.0);

  const auto thermal =
      combined_balance(Energy(2.0), Temperature(1.0), Information(0.0), Entropy(2.0));
  CHECK(thermal.verdict == Verdict::satisfied);
  CHECK(thermal.entropy_lower_bound.value() == 2.0);

  const auto mixed =
      combined_balance(Energy(1.0), Temperature(1.0), Information(kLn2), Entropy(1.5));
  CHECK(mixed.verdict == Verdict::violated);
  CHECK(mixed.entropy_lower_bound.value() == Approx(1.693147180559945).epsilon(1e-15));

  CHECK_THROWS_AS(combined_balance(Energy(1.0), Temperature(-1.0), Information(0.0), Entropy(0.0)),
                  Error);

  const auto si = PhysConstants::si();
  const auto phys = combined_balance(Energy(1.380649e-23 * 300.0), Temperature(300.0),
                                     Information(0.0), Entropy(1.0), si);
  CHECK(phys.entropy_lower_bound.value() == Approx(1.0).epsilon(1e-12));
}
