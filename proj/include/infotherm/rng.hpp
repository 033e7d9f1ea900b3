#pragma once

#include <cstdint>
#include <random>

namespace infotherm {

/// Portable random source shared by the Monte Carlo chain and the corpus
/// generators.
///
/// The engine is std::mt19937_64 seeded with the 64-bit seed directly; its
/// recurrence is fixed by the C++ standard, so raw draws are identical on
/// every conforming platform. The standard distributions are not portable,
/// so conversions are done here:
///
///   uniform():  (x >> 11) * 2^-53, a double in [0, 1)
///   index(n):   high 64 bits of the 128-bit product x * n, in [0, n)
///
/// Each call consumes exactly one engine draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  std::uint64_t index(std::uint64_t n) {
    __extension__ using u128 = unsigned __int128;
    const u128 wide = static_cast<u128>(next()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace infotherm
