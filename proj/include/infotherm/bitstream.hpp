#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "infotherm/core.hpp"

namespace infotherm::bitstream {

struct Bernoulli {
  double p = 0.5;
};
/// Flips the previous bit with probability q; the first bit is a fair coin.
struct Markov {
  double q = 0.5;
};
/// L/2 ones (rounded down) followed by zeros.
struct OrderedBlock {};
/// 0101...
struct Alternating {};

using GeneratorKind = std::variant<Bernoulli, Markov, OrderedBlock, Alternating>;

std::string kind_name(const GeneratorKind& kind);

struct GeneratorSpec {
  GeneratorKind kind;
  std::int64_t length;
  std::uint64_t seed = 0;

  void validate() const;
};

struct FileSource {
  std::filesystem::path path;
};
struct GeneratedSource {
  GeneratorSpec spec;
};
using Source = std::variant<FileSource, GeneratedSource>;

enum class BitOrder { msb_first, lsb_first };

/// An ordered sequence of bits, one byte per bit, each 0 or 1.
class Bitstream {
 public:
  Bitstream(std::vector<std::uint8_t> bits, Source source);

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::int64_t size() const noexcept { return static_cast<std::int64_t>(bits_.size()); }
  std::int64_t ones() const noexcept;
  const Source& source() const noexcept { return source_; }

 private:
  std::vector<std::uint8_t> bits_;
  Source source_;
};

enum class Equilibrium { random, ordered, undecided };

const char* to_string(Equilibrium e);

struct FileStats {
  std::int64_t L;
  std::int64_t n;
  double p_hat;
  /// L * H(p_hat).
  Information info_iid;
  /// Conditional entropy rate given the previous k bits, nats per bit;
  /// empty when L < 64 * 2^k.
  std::optional<double> info_rate_markov;
  int markov_order;
  Equilibrium equilibrium;
  double correlation_lag1;
};

inline constexpr int kMaxMarkovOrder = 16;
inline constexpr std::int64_t kMinTestLength = 64;

FileStats analyze(const Bitstream& stream, int markov_order = 3);

/// Plug-in estimate of H(X_t | X_{t-k} .. X_{t-1}) over cyclic windows.
/// Using cyclic windows makes every order share one stationary empirical
/// law, so the estimate is non-increasing in k.
double markov_entropy_rate(std::span<const std::uint8_t> bits, int order);

/// Sample lag-1 autocorrelation about the global mean; 0 for a constant
/// stream.
double lag1_autocorrelation(std::span<const std::uint8_t> bits);

/// random: |p - 1/2| <= 3/(2 sqrt L) and |r1| <= 3/sqrt L.
/// ordered: either statistic beyond its 5-sigma band. Else undecided.
Equilibrium randomness_test(const Bitstream& stream);

/// T = epsilon / (2 k ln 2) for a file in equilibrium.
Temperature file_temperature(Energy epsilon, const PhysConstants& c = PhysConstants::reduced());

/// Mean energy per nat, epsilon / (2 ln 2); equals k T.
Energy average_nat_energy(Energy epsilon);

struct HeatAndEntropy {
  Energy heat;
  Entropy entropy;
};

/// dQ = L epsilon / 2 and dS = L ln 2 (k units) for a random file.
HeatAndEntropy file_heat_and_entropy(std::int64_t L, Energy epsilon);

Bitstream generate(const GeneratorSpec& spec);

Bitstream read_bitstream(const std::filesystem::path& path,
                         BitOrder order = BitOrder::msb_first);

/// Packs bits into bytes; a trailing partial byte is zero-padded.
void write_bitstream(const Bitstream& stream, const std::filesystem::path& path,
                     BitOrder order = BitOrder::msb_first);

std::vector<std::uint8_t> unpack_bytes(std::span<const std::uint8_t> bytes, BitOrder order);
std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits, BitOrder order);

}  // namespace infotherm::bitstream
