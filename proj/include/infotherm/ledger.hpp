#pragma once

#include <cstdint>

#include "infotherm/bitstream.hpp"
#include "infotherm/core.hpp"

namespace infotherm::ledger {

/// Absolute slack, in k units, applied to every entropy inequality.
inline constexpr double kEntropyTolerance = 1e-9;

enum class InfoSource { equilibrium, markov_rate, iid };

const char* to_string(InfoSource s);

/// One emitter broadcasting a file to N receivers, each receiving it at
/// bit energy epsilon / N.
struct BroadcastResult {
  std::int64_t n_receivers;
  Temperature t_hot;
  Temperature t_cold;
  Information info_sent;
  InfoSource info_source;
  /// k * dI leaving the emitter.
  Entropy entropy_removed;
  /// N k dI arriving at the receivers.
  Entropy entropy_deposited;
  /// (N - 1) k dI.
  Entropy net_gain;
  /// k (L ln 2 - dI): thermal entropy of the file energy minus its information.
  Entropy clausius_margin;
};

struct ClausiusCheck {
  Verdict verdict;
  /// dS - k dI, k units.
  Entropy margin;
};

struct CombinedLedger {
  Energy thermal_heat;
  Temperature bath_temperature;
  Information info_delta;
  Entropy entropy_lower_bound;
  Entropy entropy_actual;
  Verdict verdict;
};

/// dI is L ln 2 for a file judged random, otherwise L times the order-k
/// Markov rate in `stats` (falling back to the iid estimate when the stream
/// is too short for that order).
BroadcastResult broadcast_balance(const bitstream::FileStats& stats, Energy epsilon_hot,
                                  std::int64_t n_receivers,
                                  const PhysConstants& c = PhysConstants::reduced());

ClausiusCheck clausius_check(Entropy entropy_change, Information info_change);

/// dS >= dQ / T + k dI.
CombinedLedger combined_balance(Energy heat, Temperature T, Information info_delta,
                                Entropy entropy_actual,
                                const PhysConstants& c = PhysConstants::reduced());

}  // namespace infotherm::ledger
