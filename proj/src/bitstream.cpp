#include "infotherm/bitstream.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>

#include "infotherm/rng.hpp"

namespace infotherm::bitstream {

using detail::require;

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string kind_name(const GeneratorKind& kind) {
  return std::visit(overloaded{
                        [](const Bernoulli&) { return std::string("bernoulli"); },
                        [](const Markov&) { return std::string("markov"); },
                        [](const OrderedBlock&) { return std::string("ordered_block"); },
                        [](const Alternating&) { return std::string("alternating"); },
                    },
                    kind);
}

const char* to_string(Equilibrium e) {
  switch (e) {
    case Equilibrium::random: return "random";
    case Equilibrium::ordered: return "ordered";
    case Equilibrium::undecided: return "undecided";
  }
  return "undecided";
}

void GeneratorSpec::validate() const {
  require(length >= 1, ErrorCode::invalid_argument, "generator length must be positive");
  std::visit(overloaded{
                 [](const Bernoulli& b) {
                   require(b.p >= 0.0 && b.p <= 1.0, ErrorCode::out_of_range,
                           "bernoulli p must lie in [0, 1]");
                 },
                 [](const Markov& m) {
                   require(m.q >= 0.0 && m.q <= 1.0, ErrorCode::out_of_range,
                           "markov q must lie in [0, 1]");
                 },
                 [](const auto&) {},
             },
             kind);
}

Bitstream::Bitstream(std::vector<std::uint8_t> bits, Source source)
    : bits_(std::move(bits)), source_(std::move(source)) {
  require(!bits_.empty(), ErrorCode::stream_too_short, "bitstream is empty");
  require(std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b <= 1; }),
          ErrorCode::invalid_argument, "bit values must be 0 or 1");
}

std::int64_t Bitstream::ones() const noexcept {
  return std::count(bits_.begin(), bits_.end(), std::uint8_t{1});
}

double markov_entropy_rate(std::span<const std::uint8_t> bits, int order) {
  require(!bits.empty(), ErrorCode::stream_too_short, "bitstream is empty");
  require(order >= 0 && order <= kMaxMarkovOrder, ErrorCode::out_of_range,
          "markov order must lie in [0, " + std::to_string(kMaxMarkovOrder) + "]");
  const std::size_t L = bits.size();
  const std::uint32_t ctx_mask = (1u << order) - 1u;
  std::vector<std::uint64_t> counts(std::size_t{2} << order, 0);

  // Context for position 0 is the last `order` bits, read cyclically.
  std::uint32_t ctx = 0;
  for (int j = order; j >= 1; --j) {
    const std::size_t pos = (L - (static_cast<std::size_t>(j) % L)) % L;
    ctx = ((ctx << 1) | bits[pos]) & ctx_mask;
  }
  for (std::size_t t = 0; t < L; ++t) {
    ++counts[(static_cast<std::size_t>(ctx) << 1) | bits[t]];
    ctx = ((ctx << 1) | bits[t]) & ctx_mask;
  }

  const auto total = static_cast<double>(L);
  double h = 0.0;
  for (std::size_t c = 0; c < counts.size(); c += 2) {
    const auto c0 = static_cast<double>(counts[c]);
    const auto c1 = static_cast<double>(counts[c + 1]);
    const double cc = c0 + c1;
    if (c0 > 0.0) h -= c0 / total * std::log(c0 / cc);
    if (c1 > 0.0) h -= c1 / total * std::log(c1 / cc);
  }
  return std::max(h, 0.0);
}

double lag1_autocorrelation(std::span<const std::uint8_t> bits) {
  require(bits.size() >= 2, ErrorCode::stream_too_short,
          "autocorrelation needs at least two bits");
  const auto L = static_cast<double>(bits.size());
  const double mean = static_cast<double>(std::count(bits.begin(), bits.end(), 1)) / L;
  double den = 0.0;
  double num = 0.0;
  for (std::size_t t = 0; t < bits.size(); ++t) {
    const double d = bits[t] - mean;
    den += d * d;
    if (t + 1 < bits.size()) num += d * (bits[t + 1] - mean);
  }
  if (den == 0.0) return 0.0;
  return std::clamp(num / den, -1.0, 1.0);
}

namespace {

Equilibrium classify(std::int64_t L, double p_hat, double r1) {
  const double root = std::sqrt(static_cast<double>(L));
  const double dp = std::abs(p_hat - 0.5);
  const double dr = std::abs(r1);
  if (dp > 5.0 / (2.0 * root) || dr > 5.0 / root) return Equilibrium::ordered;
  if (dp <= 3.0 / (2.0 * root) && dr <= 3.0 / root) return Equilibrium::random;
  return Equilibrium::undecided;
}

}  // namespace

Equilibrium randomness_test(const Bitstream& stream) {
  require(stream.size() >= kMinTestLength, ErrorCode::stream_too_short,
          "randomness test needs at least " + std::to_string(kMinTestLength) + " bits");
  const double p_hat = static_cast<double>(stream.ones()) / static_cast<double>(stream.size());
  return classify(stream.size(), p_hat, lag1_autocorrelation(stream.bits()));
}

FileStats analyze(const Bitstream& stream, int markov_order) {
  require(markov_order >= 0 && markov_order <= kMaxMarkovOrder, ErrorCode::out_of_range,
          "markov order must lie in [0, " + std::to_string(kMaxMarkovOrder) + "]");
  const std::int64_t L = stream.size();
  const std::int64_t n = stream.ones();
  const double p_hat = static_cast<double>(n) / static_cast<double>(L);

  std::optional<double> rate;
  if (L >= (std::int64_t{64} << markov_order)) {
    rate = markov_entropy_rate(stream.bits(), markov_order);
  }
  const double r1 = L >= 2 ? lag1_autocorrelation(stream.bits()) : 0.0;
  const Equilibrium eq =
      L >= kMinTestLength ? classify(L, p_hat, r1) : Equilibrium::undecided;

  return FileStats{L,
                   n,
                   p_hat,
                   Information(static_cast<double>(L) * binary_entropy(p_hat)),
                   rate,
                   markov_order,
                   eq,
                   r1};
}

Temperature file_temperature(Energy epsilon, const PhysConstants& c) {
  require(epsilon.value() > 0.0, ErrorCode::invalid_argument, "epsilon must be positive");
  return Temperature(epsilon.value() / (2.0 * c.k_boltzmann * kLn2));
}

Energy average_nat_energy(Energy epsilon) {
  require(epsilon.value() > 0.0, ErrorCode::invalid_argument, "epsilon must be positive");
  return Energy(epsilon.value() / (2.0 * kLn2));
}

HeatAndEntropy file_heat_and_entropy(std::int64_t L, Energy epsilon) {
  require(L >= 1, ErrorCode::invalid_argument, "file length must be positive");
  require(epsilon.value() > 0.0, ErrorCode::invalid_argument, "epsilon must be positive");
  const auto Ld = static_cast<double>(L);
  return {Energy(Ld * epsilon.value() / 2.0), Entropy(Ld * kLn2)};
}

Bitstream generate(const GeneratorSpec& spec) {
  spec.validate();
  const auto L = static_cast<std::size_t>(spec.length);
  std::vector<std::uint8_t> bits(L, 0);
  Rng rng(spec.seed);
  std::visit(overloaded{
                 [&](const Bernoulli& b) {
                   for (auto& bit : bits) bit = rng.uniform() < b.p ? 1 : 0;
                 },
                 [&](const Markov& m) {
                   bits[0] = rng.uniform() < 0.5 ? 1 : 0;
                   for (std::size_t i = 1; i < L; ++i) {
                     const bool flip = rng.uniform() < m.q;
                     bits[i] = flip ? static_cast<std::uint8_t>(1 - bits[i - 1]) : bits[i - 1];
                   }
                 },
                 [&](const OrderedBlock&) {
                   std::fill_n(bits.begin(), L / 2, std::uint8_t{1});
                 },
                 [&](const Alternating&) {
                   for (std::size_t i = 0; i < L; ++i) bits[i] = static_cast<std::uint8_t>(i & 1);
                 },
             },
             spec.kind);
  return Bitstream(std::move(bits), GeneratedSource{spec});
}

std::vector<std::uint8_t> unpack_bytes(std::span<const std::uint8_t> bytes, BitOrder order) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (std::uint8_t byte : bytes) {
    for (int i = 0; i < 8; ++i) {
      const int shift = order == BitOrder::msb_first ? 7 - i : i;
      bits.push_back(static_cast<std::uint8_t>((byte >> shift) & 1u));
    }
  }
  return bits;
}

std::vector<std::uint8_t> pack_bits(std::span<const std::uint8_t> bits, BitOrder order) {
  std::vector<std::uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const std::size_t j = i % 8;
    const std::size_t shift = order == BitOrder::msb_first ? 7 - j : j;
    bytes[i / 8] = static_cast<std::uint8_t>(bytes[i / 8] | (bits[i] << shift));
  }
  return bytes;
}

Bitstream read_bitstream(const std::filesystem::path& path, BitOrder order) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorCode::io_error, "cannot open " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  require(!in.bad(), ErrorCode::io_error, "read failed for " + path.string());
  require(!bytes.empty(), ErrorCode::stream_too_short, path.string() + " is empty");
  return Bitstream(unpack_bytes(bytes, order), FileSource{path});
}

void write_bitstream(const Bitstream& stream, const std::filesystem::path& path,
                     BitOrder order) {
  const auto bytes = pack_bits(stream.bits(), order);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::io_error, "cannot open " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  require(static_cast<bool>(out), ErrorCode::io_error, "write failed for " + path.string());
}

}  // namespace infotherm::bitstream
