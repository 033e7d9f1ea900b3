#pragma once

#include <cstdint>

#include "infotherm/core.hpp"

namespace infotherm::twolevel {

/// L sites, n of them excited to energy epsilon.
struct TwoLevelGas {
  std::int64_t L;
  std::int64_t n;
  Energy epsilon{1.0};

  /// Throws unless L >= 1, 0 <= n <= L and epsilon > 0.
  void validate() const;
  Energy internal_energy() const { return Energy(static_cast<double>(n) * epsilon.value()); }
};

/// Bookkeeping for moving a gas of n_hot excitations from the hot bath to
/// the cold bath. All entropies are in k units.
struct TransferRecord {
  Energy gas_heat;
  Entropy entropy_removed_hot;
  Entropy entropy_added_cold;
  Entropy net;
  Entropy clausius_lower_bound;
  Temperature t_hot;
  Temperature t_cold;
  Verdict verdict;
};

struct McConfig {
  std::int64_t steps;
  std::int64_t burn_in;
  std::uint64_t seed;
  Energy kT;

  void validate() const;
};

struct McStatistics {
  double mean_n;
  /// Batch-means estimate over kBatches equal batches of post-burn-in steps.
  double standard_error;
  std::int64_t samples;
  std::int64_t min_n;
  std::int64_t max_n;
  std::int64_t final_n;
  double acceptance_rate;

  static constexpr int kBatches = 20;
};

/// ln C(L, n). Exact product summation when min(n, L - n) is small,
/// log-gamma otherwise.
double log_multiplicity(std::int64_t L, std::int64_t n);

Entropy entropy_exact(const TwoLevelGas& gas);

/// L ln L - n ln n - (L-n) ln(L-n); requires 0 < n < L.
Entropy entropy_stirling(const TwoLevelGas& gas);

/// T = epsilon / (k ln((L-n)/n)). Negative for n > L/2; n == L/2 throws
/// infinite_temperature, n in {0, L} throws zero_temperature.
Temperature temperature_closed(const TwoLevelGas& gas,
                               const PhysConstants& c = PhysConstants::reduced());

/// Central difference of U against S_exact with a step of one excitation.
Temperature temperature_numeric(const TwoLevelGas& gas,
                                const PhysConstants& c = PhysConstants::reduced());

/// Mean excitation count L / (1 + exp(epsilon / kT)).
double occupation_from_temperature(std::int64_t L, Energy epsilon, Temperature T,
                                   const PhysConstants& c = PhysConstants::reduced());

/// Requires 0 < n_cold <= n_hot < L, and neither count at L/2.
TransferRecord transfer_balance(std::int64_t L, std::int64_t n_hot, std::int64_t n_cold,
                                Energy epsilon,
                                const PhysConstants& c = PhysConstants::reduced());

/// Single-site-flip Metropolis chain started from the ground state. Each step
/// proposes flipping one uniformly chosen site. kT and epsilon share units.
McStatistics metropolis_sample(std::int64_t L, Energy epsilon, const McConfig& cfg);

}  // namespace infotherm::twolevel
