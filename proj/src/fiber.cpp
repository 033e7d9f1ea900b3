#include "infotherm/fiber.hpp"

#include <algorithm>
#include <cmath>

#include "infotherm/bitstream.hpp"

namespace infotherm::fiber {

using detail::require;

const char* to_string(StepKind kind) {
  switch (kind) {
    case StepKind::isothermal_write: return "isothermal_write";
    case StepKind::adiabatic_attenuation: return "adiabatic_attenuation";
    case StepKind::isothermal_read: return "isothermal_read";
    case StepKind::adiabatic_amplification: return "adiabatic_amplification";
  }
  return "unknown";
}

void FiberChainConfig::validate() const {
  require(epsilon0.value() > 0.0 && std::isfinite(epsilon0.value()),
          ErrorCode::invalid_argument, "launch bit energy must be positive");
  require(alpha > 0.0 && std::isfinite(alpha), ErrorCode::invalid_argument,
          "attenuation coefficient must be positive");
  require(span_km > 0.0 && std::isfinite(span_km), ErrorCode::invalid_argument,
          "span length must be positive");
  require(n_spans >= 0, ErrorCode::invalid_argument, "span count must be non-negative");
  require(file_length >= 1, ErrorCode::invalid_argument, "file length must be positive");
  const double g = span_gain();
  require(g > 0.0 && g < 1.0, ErrorCode::out_of_range,
          "span gain exp(-alpha * span_km) must lie strictly inside (0, 1)");
}

double FiberChainConfig::span_gain() const { return std::exp(-alpha * span_km); }

double carnot_efficiency(Temperature t_hot, Temperature t_cold) {
  require(t_cold.value() > 0.0, ErrorCode::invalid_argument, "T_cold must be positive");
  require(t_cold.value() <= t_hot.value(), ErrorCode::invalid_argument,
          "Carnot efficiency needs T_cold <= T_hot");
  return 1.0 - t_cold.value() / t_hot.value();
}

AmplifierWork amplifier_work(Energy q_cold, Temperature t_hot, Temperature t_cold) {
  require(q_cold.value() > 0.0, ErrorCode::invalid_argument, "Q_cold must be positive");
  require(t_cold.value() > 0.0, ErrorCode::invalid_argument, "T_cold must be positive");
  require(t_cold.value() < t_hot.value(), ErrorCode::invalid_argument,
          "amplification needs T_cold < T_hot");
  const double q_hot = q_cold.value() * (t_hot.value() / t_cold.value());
  return {Energy(q_hot), Energy(q_hot - q_cold.value())};
}

ChainResult simulate_chain(const FiberChainConfig& cfg, const PhysConstants& c) {
  cfg.validate();
  const double g = cfg.span_gain();
  const double eps0 = cfg.epsilon0.value();
  const auto [heat_launch, entropy_launch] =
      bitstream::file_heat_and_entropy(cfg.file_length, cfg.epsilon0);
  const Information info(entropy_launch.value());

  const Energy eps_in(eps0);
  const Energy eps_out(g * eps0);
  const Temperature t_hot = bitstream::file_temperature(eps_in, c);
  const Temperature t_cold(g * t_hot.value());
  const Energy q_cold(g * heat_launch.value());
  const AmplifierWork amp = amplifier_work(q_cold, t_hot, t_cold);

  ChainResult result{{}, Energy(0.0), info, info};
  result.cycles.reserve(static_cast<std::size_t>(cfg.n_spans));
  double total_work = 0.0;
  for (std::int64_t span = 0; span < cfg.n_spans; ++span) {
    const std::array<StepRecord, 4> steps{{
        {StepKind::isothermal_write, eps_in, eps_in, t_hot, t_hot, amp.q_hot, Energy(0.0), info},
        // Energy shed by the fiber leaves the system and is not credited.
        {StepKind::adiabatic_attenuation, eps_in, eps_out, t_hot, t_cold, Energy(0.0),
         Energy(0.0), info},
        {StepKind::isothermal_read, eps_out, eps_out, t_cold, t_cold, q_cold, Energy(0.0), info},
        {StepKind::adiabatic_amplification, eps_out, eps_in, t_cold, t_hot, Energy(0.0),
         amp.work, info},
    }};
    result.cycles.push_back(CycleRecord{span, steps, eps_in, eps_out, t_hot, t_cold, amp.q_hot,
                                        q_cold, amp.work, info});
    total_work += amp.work.value();
  }
  result.total_work = Energy(total_work);
  result.info_out = result.cycles.empty() ? info : result.cycles.back().steps.back().info;
  return result;
}

EntropyAudit audit_cycle(const CycleRecord& cycle, const PhysConstants& c) {
  const double delivered = cycle.q_cold.value() + cycle.work_in.value();
  const double s_out = delivered / (c.k_boltzmann * cycle.t_hot.value());
  const double s_in = cycle.q_cold.value() / (c.k_boltzmann * cycle.t_cold.value());
  const double balance = s_out - s_in;
  const double tol = 1e-9 * std::max(1.0, std::abs(s_in));
  return {Entropy(balance), balance >= -tol ? Verdict::satisfied : Verdict::violated};
}

}  // namespace infotherm::fiber
