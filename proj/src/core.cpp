#include "infotherm/core.hpp"

namespace infotherm {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid argument";
    case ErrorCode::out_of_range: return "out of range";
    case ErrorCode::zero_temperature: return "zero temperature";
    case ErrorCode::infinite_temperature: return "infinite temperature";
    case ErrorCode::stream_too_short: return "stream too short";
    case ErrorCode::io_error: return "i/o error";
  }
  return "unknown";
}

const char* to_string(UnitMode mode) {
  return mode == UnitMode::si ? "si" : "reduced";
}

const char* to_string(Verdict v) {
  return v == Verdict::satisfied ? "satisfied" : "violated";
}

namespace detail {

void fail(ErrorCode code, const std::string& what) {
  throw Error(code, std::string(to_string(code)) + ": " + what);
}

}  // namespace detail

Information::Information(double nats) : nats_(nats) {
  detail::require(std::isfinite(nats) && nats >= 0.0, ErrorCode::invalid_argument,
                  "information must be a finite non-negative number of nats");
}

Temperature::Temperature(double value) : value_(value) {
  detail::require(value != 0.0, ErrorCode::zero_temperature,
                  "temperature must be non-zero");
  detail::require(!std::isnan(value), ErrorCode::invalid_argument,
                  "temperature is NaN");
}

Information bits_to_nats(double bits) {
  detail::require(bits >= 0.0, ErrorCode::invalid_argument,
                  "bit count must be non-negative");
  return Information(bits * kLn2);
}

double nats_to_bits(Information info) { return info.nats() / kLn2; }

Entropy entropy_from_information(Information info) {
  return Entropy(info.nats());
}

double binary_entropy(double p) {
  detail::require(p >= 0.0 && p <= 1.0, ErrorCode::out_of_range,
                  "probability must lie in [0, 1]");
  auto term = [](double x) { return x > 0.0 ? -x * std::log(x) : 0.0; };
  return term(p) + term(1.0 - p);
}

}  // namespace infotherm
