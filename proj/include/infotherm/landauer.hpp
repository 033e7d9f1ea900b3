#pragma once

#include <optional>

#include "infotherm/core.hpp"

namespace infotherm::landauer {

/// Landauer-limit inputs. Always evaluated in SI units.
struct BoundQuery {
  /// W.
  double power;
  /// K.
  double noise_temperature;
  double margin = 10.0;
  /// Operations per second, if a concrete device rate is to be checked.
  std::optional<double> bit_rate;

  void validate() const;
};

struct BoundReport {
  double max_bit_rate;
  /// k T_n ln 2, J.
  double landauer_energy_per_bit;
  /// P / f_max, J.
  double energy_per_bit_at_max;
  std::optional<double> device_temperature;
  std::optional<double> energy_per_bit;
  /// Set only when a bit rate was supplied: satisfied iff it does not exceed f_max.
  std::optional<Verdict> verdict;
};

/// T = P / (k f ln 2), kelvin.
Temperature device_temperature(double power, double bit_rate);

/// f_max = P / (margin k T_n ln 2), s^-1.
double max_bit_rate(double power, double noise_temperature, double margin = 10.0);

/// k T ln 2 in joules.
double landauer_floor(double temperature);

BoundReport evaluate(const BoundQuery& query);

}  // namespace infotherm::landauer
