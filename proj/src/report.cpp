#include "infotherm/report.hpp"

#include <cstdio>
#include <fstream>

namespace infotherm::report {

using detail::require;

Report::Report(std::string command) : command_(std::move(command)) {}

void Report::input(const std::string& key, Json value) { inputs_[key] = std::move(value); }

void Report::result(const std::string& key, double value, const std::string& unit) {
  results_[key] = Json{{"value", value}, {"unit", unit}};
}

void Report::label(const std::string& key, const std::string& value) {
  results_[key] = Json{{"value", value}, {"unit", ""}};
}

void Report::verdict(const std::string& key, Verdict v) {
  verdicts_[key] = to_string(v);
  if (v == Verdict::violated) violated_ = true;
}

Json Report::to_json() const {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command_},
              {"inputs", inputs_},
              {"results", results_},
              {"verdicts", verdicts_}};
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%#.12g", x);
  return buf;
}

void Report::write_text(std::ostream& out) const {
  out << command_ << "\n";
  for (const auto& [key, entry] : results_.items()) {
    out << "  " << key << " = ";
    const auto& v = entry.at("value");
    if (v.is_number_float()) {
      out << format_number(v.get<double>());
    } else if (v.is_string()) {
      out << v.get<std::string>();
    } else {
      out << v.dump();
    }
    const auto unit = entry.at("unit").get<std::string>();
    if (!unit.empty()) out << " " << unit;
    out << "\n";
  }
  for (const auto& [key, v] : verdicts_.items()) {
    out << "  verdict " << key << ": " << v.get<std::string>() << "\n";
  }
}

void write_chain_csv(std::ostream& out, std::span<const fiber::CycleRecord> cycles) {
  require(!cycles.empty(), ErrorCode::invalid_argument, "no spans to export");
  out << kChainCsvHeader << "\n";
  for (const auto& c : cycles) {
    out << c.span_index << ',' << format_number(c.eps_in.value()) << ','
        << format_number(c.eps_out.value()) << ',' << format_number(c.t_hot.value()) << ','
        << format_number(c.t_cold.value()) << ',' << format_number(c.q_hot.value()) << ','
        << format_number(c.q_cold.value()) << ',' << format_number(c.work_in.value()) << ','
        << format_number(c.info.nats()) << "\n";
  }
}

void export_csv(std::span<const fiber::CycleRecord> cycles, const std::filesystem::path& path) {
  require(!cycles.empty(), ErrorCode::invalid_argument, "no spans to export");
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(static_cast<bool>(out), ErrorCode::io_error, "cannot open " + path.string());
  write_chain_csv(out, cycles);
  out.flush();
  require(static_cast<bool>(out), ErrorCode::io_error, "write failed for " + path.string());
}

}  // namespace infotherm::report
