#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace infotherm {

enum class ErrorCode {
  invalid_argument,
  out_of_range,
  zero_temperature,
  infinite_temperature,
  stream_too_short,
  io_error,
};

const char* to_string(ErrorCode code);

/// Every operation in the library reports failure through this exception.
/// The code lets callers tell an infinite-temperature state apart from a
/// plain bad argument without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline constexpr double kLn2 = std::numbers::ln2;

/// CODATA 2018 exact value, J/K.
inline constexpr double kBoltzmannSI = 1.380649e-23;

enum class UnitMode { si, reduced };

const char* to_string(UnitMode mode);

struct PhysConstants {
  double k_boltzmann;
  UnitMode mode;

  static constexpr PhysConstants si() { return {kBoltzmannSI, UnitMode::si}; }
  static constexpr PhysConstants reduced() { return {1.0, UnitMode::reduced}; }
};

/// Information in nats. Bits only appear at I/O boundaries.
class Information {
 public:
  constexpr Information() = default;
  explicit Information(double nats);

  constexpr double nats() const noexcept { return nats_; }
  double bits() const noexcept { return nats_ / kLn2; }

 private:
  double nats_ = 0.0;
};

/// Entropy in units of k. Differences and margins may be negative.
class Entropy {
 public:
  constexpr Entropy() = default;
  constexpr explicit Entropy(double k_units) : value_(k_units) {}

  constexpr double value() const noexcept { return value_; }
  constexpr double to_physical(const PhysConstants& c) const noexcept {
    return value_ * c.k_boltzmann;
  }

 private:
  double value_ = 0.0;
};

/// Kelvin in si mode, epsilon/k in reduced mode. Never zero; may be
/// negative for a population-inverted gas.
class Temperature {
 public:
  explicit Temperature(double value);

  constexpr double value() const noexcept { return value_; }

 private:
  double value_;
};

/// Joules in si mode, multiples of epsilon in reduced mode.
class Energy {
 public:
  constexpr Energy() = default;
  constexpr explicit Energy(double value) : value_(value) {}

  constexpr double value() const noexcept { return value_; }

 private:
  double value_ = 0.0;
};

enum class Verdict { satisfied, violated };

const char* to_string(Verdict v);

Information bits_to_nats(double bits);
double nats_to_bits(Information info);
Entropy entropy_from_information(Information info);

/// Shannon entropy of a Bernoulli(p) variable in nats, with 0 ln 0 = 0.
double binary_entropy(double p);

namespace detail {

[[noreturn]] void fail(ErrorCode code, const std::string& what);

inline void require(bool cond, ErrorCode code, const std::string& what) {
  if (!cond) fail(code, what);
}

}  // namespace detail

}  // namespace infotherm
