#include "infotherm/ledger.hpp"

#include <algorithm>
#include <string>

namespace infotherm::ledger {

using detail::require;

const char* to_string(InfoSource s) {
  switch (s) {
    case InfoSource::equilibrium: return "equilibrium";
    case InfoSource::markov_rate: return "markov_rate";
    case InfoSource::iid: return "iid";
  }
  return "iid";
}

BroadcastResult broadcast_balance(const bitstream::FileStats& stats, Energy epsilon_hot,
                                  std::int64_t n_receivers, const PhysConstants& c) {
  require(n_receivers >= 1, ErrorCode::invalid_argument, "need at least one receiver");
  require(epsilon_hot.value() > 0.0, ErrorCode::invalid_argument,
          "epsilon_hot must be positive");
  require(stats.L >= 1, ErrorCode::invalid_argument, "stats describe an empty stream");

  const Temperature t_hot = bitstream::file_temperature(epsilon_hot, c);
  const Temperature t_cold(t_hot.value() / static_cast<double>(n_receivers));

  const auto L = static_cast<double>(stats.L);
  const double capacity = L * kLn2;
  double info = 0.0;
  InfoSource source = InfoSource::iid;
  if (stats.equilibrium == bitstream::Equilibrium::random) {
    info = capacity;
    source = InfoSource::equilibrium;
  } else if (stats.info_rate_markov) {
    info = L * *stats.info_rate_markov;
    source = InfoSource::markov_rate;
  } else {
    info = stats.info_iid.nats();
  }
  info = std::min(info, capacity);

  const auto N = static_cast<double>(n_receivers);
  return BroadcastResult{n_receivers,
                         t_hot,
                         t_cold,
                         Information(info),
                         source,
                         Entropy(info),
                         Entropy(N * info),
                         Entropy((N - 1.0) * info),
                         Entropy(capacity - info)};
}

ClausiusCheck clausius_check(Entropy entropy_change, Information info_change) {
  const double margin = entropy_change.value() - info_change.nats();
  return {margin >= -kEntropyTolerance ? Verdict::satisfied : Verdict::violated,
          Entropy(margin)};
}

CombinedLedger combined_balance(Energy heat, Temperature T, Information info_delta,
                                Entropy entropy_actual, const PhysConstants& c) {
  require(T.value() > 0.0, ErrorCode::invalid_argument,
          "bath temperature must be positive");
  const double bound = heat.value() / (c.k_boltzmann * T.value()) + info_delta.nats();
  const Verdict v = entropy_actual.value() >= bound - kEntropyTolerance ? Verdict::satisfied
                                                                         : Verdict::violated;
  return {heat, T, info_delta, Entropy(bound), entropy_actual, v};
}

}  // namespace infotherm::ledger
