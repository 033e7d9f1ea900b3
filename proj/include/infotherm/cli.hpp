#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace infotherm::cli {

inline constexpr int kExitOk = 0;
/// The computation succeeded but a thermodynamic verdict came out violated.
inline constexpr int kExitViolated = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. `args` excludes the program name. The report goes
/// to `out`, diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Expands `--config path`: every `key=value` line whose `--key` is not
/// already on the command line is appended as `--key value`. A value of
/// `true` appends a bare flag, `false` is dropped.
std::vector<std::string> apply_config(std::span<const std::string> args);

}  // namespace infotherm::cli
