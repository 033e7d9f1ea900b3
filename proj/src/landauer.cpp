#include "infotherm/landauer.hpp"

#include <cmath>

namespace infotherm::landauer {

using detail::require;

namespace {

constexpr PhysConstants kSI = PhysConstants::si();

bool positive(double x) { return x > 0.0 && std::isfinite(x); }

}  // namespace

void BoundQuery::validate() const {
  require(positive(power), ErrorCode::invalid_argument, "power must be positive");
  require(positive(noise_temperature), ErrorCode::invalid_argument,
          "noise temperature must be positive");
  require(margin >= 1.0 && std::isfinite(margin), ErrorCode::invalid_argument,
          "margin must be at least 1");
  if (bit_rate) {
    require(positive(*bit_rate), ErrorCode::invalid_argument, "bit rate must be positive");
  }
}

Temperature device_temperature(double power, double bit_rate) {
  require(positive(power), ErrorCode::invalid_argument, "power must be positive");
  require(positive(bit_rate), ErrorCode::invalid_argument, "bit rate must be positive");
  return Temperature(power / (kSI.k_boltzmann * bit_rate * kLn2));
}

double max_bit_rate(double power, double noise_temperature, double margin) {
  BoundQuery{power, noise_temperature, margin, std::nullopt}.validate();
  return power / (margin * kSI.k_boltzmann * noise_temperature * kLn2);
}

double landauer_floor(double temperature) {
  require(positive(temperature), ErrorCode::invalid_argument, "temperature must be positive");
  return kSI.k_boltzmann * temperature * kLn2;
}

BoundReport evaluate(const BoundQuery& query) {
  query.validate();
  BoundReport r{};
  r.max_bit_rate = max_bit_rate(query.power, query.noise_temperature, query.margin);
  r.landauer_energy_per_bit = landauer_floor(query.noise_temperature);
  r.energy_per_bit_at_max = query.power / r.max_bit_rate;
  if (query.bit_rate) {
    r.device_temperature = device_temperature(query.power, *query.bit_rate).value();
    r.energy_per_bit = query.power / *query.bit_rate;
    r.verdict = *query.bit_rate <= r.max_bit_rate ? Verdict::satisfied : Verdict::violated;
  }
  return r;
}

}  // namespace infotherm::landauer
