#include "infotherm/twolevel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "infotherm/rng.hpp"

namespace infotherm::twolevel {

using detail::require;

namespace {

// Below this many factors the direct product sum is both exact enough and
// cheap; above it log-gamma is used.
constexpr std::int64_t kDirectSumLimit = 64;

void check_interior(const TwoLevelGas& gas) {
  gas.validate();
  require(gas.n > 0 && gas.n < gas.L, ErrorCode::zero_temperature,
          "n must satisfy 0 < n < L (n = " + std::to_string(gas.n) + ", L = " +
              std::to_string(gas.L) + ")");
}

bool at_half_filling(std::int64_t L, std::int64_t n) { return 2 * n == L; }

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

}  // namespace

void TwoLevelGas::validate() const {
  require(L >= 1, ErrorCode::invalid_argument, "L must be at least 1");
  require(n >= 0 && n <= L, ErrorCode::out_of_range,
          "n = " + std::to_string(n) + " outside [0, " + std::to_string(L) + "]");
  require(epsilon.value() > 0.0 && std::isfinite(epsilon.value()),
          ErrorCode::invalid_argument, "epsilon must be positive");
}

void McConfig::validate() const {
  require(steps > 0, ErrorCode::invalid_argument, "steps must be positive");
  require(burn_in >= 0 && burn_in < steps, ErrorCode::invalid_argument,
          "burn_in must satisfy 0 <= burn_in < steps");
  require(kT.value() > 0.0, ErrorCode::invalid_argument, "kT must be positive");
}

double log_multiplicity(std::int64_t L, std::int64_t n) {
  require(L >= 1, ErrorCode::invalid_argument, "L must be at least 1");
  require(n >= 0 && n <= L, ErrorCode::out_of_range,
          "n = " + std::to_string(n) + " outside [0, " + std::to_string(L) + "]");
  const std::int64_t k = std::min(n, L - n);
  if (k == 0) return 0.0;
  if (k <= kDirectSumLimit) {
    // ln C(L, k) = sum_{i=1..k} ln((L - k + i) / i)
    double sum = 0.0;
    for (std::int64_t i = 1; i <= k; ++i) {
      sum += std::log(static_cast<double>(L - k + i) / static_cast<double>(i));
    }
    return sum;
  }
  const auto Ld = static_cast<double>(L);
  const auto kd = static_cast<double>(k);
  return std::lgamma(Ld + 1.0) - std::lgamma(kd + 1.0) - std::lgamma(Ld - kd + 1.0);
}

Entropy entropy_exact(const TwoLevelGas& gas) {
  gas.validate();
  return Entropy(log_multiplicity(gas.L, gas.n));
}

Entropy entropy_stirling(const TwoLevelGas& gas) {
  gas.validate();
  require(gas.n > 0 && gas.n < gas.L, ErrorCode::out_of_range,
          "Stirling form needs 0 < n < L; use entropy_exact at the boundary");
  const auto L = static_cast<double>(gas.L);
  const auto n = static_cast<double>(gas.n);
  return Entropy(xlogx(L) - xlogx(n) - xlogx(L - n));
}

Temperature temperature_closed(const TwoLevelGas& gas, const PhysConstants& c) {
  check_interior(gas);
  require(!at_half_filling(gas.L, gas.n), ErrorCode::infinite_temperature,
          "n = L/2 has ln((L-n)/n) = 0");
  const auto L = static_cast<double>(gas.L);
  const auto n = static_cast<double>(gas.n);
  return Temperature(gas.epsilon.value() / (c.k_boltzmann * std::log((L - n) / n)));
}

Temperature temperature_numeric(const TwoLevelGas& gas, const PhysConstants& c) {
  check_interior(gas);
  require(gas.L >= 4, ErrorCode::invalid_argument, "finite difference needs L >= 4");
  require(!at_half_filling(gas.L, gas.n), ErrorCode::infinite_temperature,
          "entropy is stationary at n = L/2");
  const double dU = 2.0 * gas.epsilon.value();
  const double dS = log_multiplicity(gas.L, gas.n + 1) - log_multiplicity(gas.L, gas.n - 1);
  require(dS != 0.0, ErrorCode::infinite_temperature, "entropy difference vanished");
  return Temperature(dU / (c.k_boltzmann * dS));
}

double occupation_from_temperature(std::int64_t L, Energy epsilon, Temperature T,
                                   const PhysConstants& c) {
  require(L >= 1, ErrorCode::invalid_argument, "L must be at least 1");
  require(epsilon.value() > 0.0, ErrorCode::invalid_argument, "epsilon must be positive");
  const double beta_eps = epsilon.value() / (c.k_boltzmann * T.value());
  const auto Ld = static_cast<double>(L);
  if (std::abs(beta_eps) <= 1e-12) return 0.5 * Ld;
  return Ld / (1.0 + std::exp(beta_eps));
}

TransferRecord transfer_balance(std::int64_t L, std::int64_t n_hot, std::int64_t n_cold,
                                Energy epsilon, const PhysConstants& c) {
  require(0 < n_cold && n_cold <= n_hot && n_hot < L, ErrorCode::invalid_argument,
          "transfer needs 0 < n_cold <= n_hot < L (got n_hot = " + std::to_string(n_hot) +
              ", n_cold = " + std::to_string(n_cold) + ")");
  const TwoLevelGas hot{L, n_hot, epsilon};
  const TwoLevelGas cold{L, n_cold, epsilon};
  const Temperature t_hot = temperature_closed(hot, c);
  const Temperature t_cold = temperature_closed(cold, c);

  const auto Ld = static_cast<double>(L);
  const auto nh = static_cast<double>(n_hot);
  const auto nc = static_cast<double>(n_cold);
  const Energy heat(nh * epsilon.value());

  const double removed = nh * std::log((Ld - nh) / nh);
  const double added = nh * std::log((Ld - nc) / nc);
  const double net = added - removed;
  const double bound = heat.value() / (c.k_boltzmann * t_cold.value()) -
                       heat.value() / (c.k_boltzmann * t_hot.value());
  const Verdict verdict = net >= bound - 1e-9 ? Verdict::satisfied : Verdict::violated;
  return TransferRecord{heat,          Entropy(removed), Entropy(added), Entropy(net),
                        Entropy(bound), t_hot,           t_cold,         verdict};
}

McStatistics metropolis_sample(std::int64_t L, Energy epsilon, const McConfig& cfg) {
  require(L >= 10, ErrorCode::invalid_argument, "Metropolis chain needs L >= 10");
  require(epsilon.value() > 0.0, ErrorCode::invalid_argument, "epsilon must be positive");
  cfg.validate();

  const double p_excite = std::exp(-epsilon.value() / cfg.kT.value());
  Rng rng(cfg.seed);
  std::vector<std::uint8_t> sites(static_cast<std::size_t>(L), 0);
  std::int64_t n = 0;

  const std::int64_t samples = cfg.steps - cfg.burn_in;
  const std::int64_t batches = std::min<std::int64_t>(McStatistics::kBatches, samples);
  const std::int64_t batch_size = samples / batches;
  std::vector<double> batch_sums(static_cast<std::size_t>(batches), 0.0);

  double total = 0.0;
  std::int64_t accepted = 0;
  std::int64_t min_n = L;
  std::int64_t max_n = 0;

  for (std::int64_t step = 0; step < cfg.steps; ++step) {
    auto& site = sites[rng.index(static_cast<std::uint64_t>(L))];
    if (site != 0) {
      site = 0;
      --n;
      ++accepted;
    } else if (rng.uniform() < p_excite) {
      site = 1;
      ++n;
      ++accepted;
    }
    if (step < cfg.burn_in) continue;

    const std::int64_t s = step - cfg.burn_in;
    const auto nd = static_cast<double>(n);
    total += nd;
    min_n = std::min(min_n, n);
    max_n = std::max(max_n, n);
    const std::int64_t b = s / batch_size;
    if (b < batches) batch_sums[static_cast<std::size_t>(b)] += nd;
  }

  const double mean = total / static_cast<double>(samples);
  double se = 0.0;
  if (batches >= 2) {
    double batch_mean_of_means = 0.0;
    for (double& s : batch_sums) {
      s /= static_cast<double>(batch_size);
      batch_mean_of_means += s;
    }
    batch_mean_of_means /= static_cast<double>(batches);
    double ss = 0.0;
    for (double s : batch_sums) ss += (s - batch_mean_of_means) * (s - batch_mean_of_means);
    const double var = ss / static_cast<double>(batches - 1);
    se = std::sqrt(var / static_cast<double>(batches));
  }

  return McStatistics{mean,  se, samples, min_n, max_n, n,
                      static_cast<double>(accepted) / static_cast<double>(cfg.steps)};
}

}  // namespace infotherm::twolevel
