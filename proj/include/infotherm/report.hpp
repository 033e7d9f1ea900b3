#pragma once

#include <filesystem>
#include <ostream>
#include <span>
#include <string>

#include "json.hpp"

#include "infotherm/core.hpp"
#include "infotherm/fiber.hpp"

namespace infotherm::report {

/// Bumped on any breaking change to the JSON layout.
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

/// Output of one CLI invocation. Keys keep insertion order so the rendered
/// document is byte-stable.
class Report {
 public:
  explicit Report(std::string command);

  const std::string& command() const noexcept { return command_; }

  void input(const std::string& key, Json value);
  void result(const std::string& key, double value, const std::string& unit);
  /// Categorical result; rendered with an empty unit.
  void label(const std::string& key, const std::string& value);
  void verdict(const std::string& key, Verdict v);

  bool any_violated() const noexcept { return violated_; }

  Json to_json() const;
  void write_text(std::ostream& out) const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  Json results_ = Json::object();
  Json verdicts_ = Json::object();
  bool violated_ = false;
};

/// Twelve significant digits, trailing zeros kept.
std::string format_number(double x);

inline constexpr const char* kChainCsvHeader =
    "span,eps_in,eps_out,T_hot,T_cold,Q_hot,Q_cold,W,info";

void write_chain_csv(std::ostream& out, std::span<const fiber::CycleRecord> cycles);
void export_csv(std::span<const fiber::CycleRecord> cycles, const std::filesystem::path& path);

}  // namespace infotherm::report
