#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "infotherm/core.hpp"

namespace infotherm::fiber {

enum class StepKind {
  isothermal_write,
  adiabatic_attenuation,
  isothermal_read,
  adiabatic_amplification,
};

const char* to_string(StepKind kind);

/// One leg of the four-step cycle. `heat` is exchanged with a bath at fixed
/// temperature (isothermal legs only); `work` is what the amplifier supplies
/// (amplification leg only).
struct StepRecord {
  StepKind kind;
  Energy bit_energy_start;
  Energy bit_energy_end;
  Temperature t_start;
  Temperature t_end;
  Energy heat;
  Energy work;
  Information info;
};

struct CycleRecord {
  std::int64_t span_index;
  std::array<StepRecord, 4> steps;
  Energy eps_in;
  Energy eps_out;
  Temperature t_hot;
  Temperature t_cold;
  Energy q_hot;
  Energy q_cold;
  Energy work_in;
  Information info;
};

struct FiberChainConfig {
  Energy epsilon0{1.0};
  /// Per km.
  double alpha = 0.0;
  double span_km = 0.0;
  std::int64_t n_spans = 0;
  std::int64_t file_length = 0;

  void validate() const;
  /// Power gain of one span, exp(-alpha * span_km).
  double span_gain() const;
};

struct ChainResult {
  std::vector<CycleRecord> cycles;
  Energy total_work;
  Information info_in;
  Information info_out;
};

struct AmplifierWork {
  Energy q_hot;
  Energy work;
};

struct EntropyAudit {
  /// Delivered heat over T_hot minus absorbed heat over T_cold, k units.
  Entropy balance;
  Verdict verdict;
};

/// 1 - T_cold / T_hot; requires 0 < T_cold <= T_hot.
double carnot_efficiency(Temperature t_hot, Temperature t_cold);

/// Heat the amplifier must deliver, and the work it must add, to lift
/// q_cold from t_cold to t_hot at constant entropy.
AmplifierWork amplifier_work(Energy q_cold, Temperature t_hot, Temperature t_cold);

ChainResult simulate_chain(const FiberChainConfig& cfg,
                           const PhysConstants& c = PhysConstants::reduced());

/// Second-law audit of a cycle as recorded. The delivered heat is taken as
/// q_cold + work_in, so a record whose work_in was reduced after simulation
/// shows up as a negative balance.
EntropyAudit audit_cycle(const CycleRecord& cycle,
                         const PhysConstants& c = PhysConstants::reduced());

}  // namespace infotherm::fiber
