#include "infotherm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "infotherm/bitstream.hpp"
#include "infotherm/core.hpp"
#include "infotherm/fiber.hpp"
#include "infotherm/landauer.hpp"
#include "infotherm/ledger.hpp"
#include "infotherm/report.hpp"
#include "infotherm/twolevel.hpp"

namespace infotherm::cli {

using detail::require;
using report::Report;

namespace {

struct Globals {
  bool json = false;
  std::string units = "reduced";
  double epsilon = 1.0;
  std::optional<double> epsilon_joules;
  std::string config;
};

/// Unit-dependent context shared by every handler.
struct Context {
  PhysConstants consts;
  Energy epsilon;
  std::string energy_unit;
  std::string temperature_unit;
};

Context make_context(const Globals& g) {
  if (g.units == "si") {
    require(g.epsilon_joules.has_value(), ErrorCode::invalid_argument,
            "--units si requires --epsilon-joules");
    require(*g.epsilon_joules > 0.0, ErrorCode::invalid_argument,
            "--epsilon-joules must be positive");
    return {PhysConstants::si(), Energy(*g.epsilon_joules), "J", "K"};
  }
  require(g.epsilon > 0.0, ErrorCode::invalid_argument, "--epsilon must be positive");
  return {PhysConstants::reduced(), Energy(g.epsilon), "eps", "eps/k"};
}

void echo_units(Report& r, const Context& ctx) {
  r.input("units", to_string(ctx.consts.mode));
  r.input("epsilon", ctx.epsilon.value());
}

bitstream::BitOrder parse_bit_order(const std::string& s) {
  return s == "lsb" ? bitstream::BitOrder::lsb_first : bitstream::BitOrder::msb_first;
}

// ---------------------------------------------------------------- gas

struct GasArgs {
  std::int64_t L = 0;
  std::int64_t n = 0;
  std::int64_t n_hot = 0;
  std::int64_t n_cold = 0;
  double temperature = 0.0;
  bool numeric = false;
  std::int64_t steps = 1'000'000;
  std::int64_t burn_in = 100'000;
  std::uint64_t seed = 0;
};

Report gas_entropy(const GasArgs& a, const Context& ctx) {
  const twolevel::TwoLevelGas gas{a.L, a.n, ctx.epsilon};
  Report r("gas entropy");
  r.input("L", a.L);
  r.input("n", a.n);
  echo_units(r, ctx);
  r.result("log_multiplicity", twolevel::log_multiplicity(a.L, a.n), "1");
  r.result("entropy_exact", twolevel::entropy_exact(gas).value(), "k");
  if (a.n > 0 && a.n < a.L) {
    r.result("entropy_stirling", twolevel::entropy_stirling(gas).value(), "k");
  }
  r.result("internal_energy", gas.internal_energy().value(), ctx.energy_unit);
  return r;
}

Report gas_temperature(const GasArgs& a, const Context& ctx) {
  const twolevel::TwoLevelGas gas{a.L, a.n, ctx.epsilon};
  Report r("gas temperature");
  r.input("L", a.L);
  r.input("n", a.n);
  r.input("numeric", a.numeric);
  echo_units(r, ctx);
  r.result("temperature_closed", twolevel::temperature_closed(gas, ctx.consts).value(),
           ctx.temperature_unit);
  if (a.numeric) {
    r.result("temperature_numeric", twolevel::temperature_numeric(gas, ctx.consts).value(),
             ctx.temperature_unit);
  }
  return r;
}

Report gas_occupation(const GasArgs& a, const Context& ctx) {
  Report r("gas occupation");
  r.input("L", a.L);
  r.input("temperature", a.temperature);
  echo_units(r, ctx);
  const double n = twolevel::occupation_from_temperature(a.L, ctx.epsilon,
                                                         Temperature(a.temperature), ctx.consts);
  r.result("mean_n", n, "count");
  r.result("mean_fraction", n / static_cast<double>(a.L), "1");
  return r;
}

Report gas_transfer(const GasArgs& a, const Context& ctx) {
  const auto rec = twolevel::transfer_balance(a.L, a.n_hot, a.n_cold, ctx.epsilon, ctx.consts);
  Report r("gas transfer");
  r.input("L", a.L);
  r.input("n_hot", a.n_hot);
  r.input("n_cold", a.n_cold);
  echo_units(r, ctx);
  r.result("gas_heat", rec.gas_heat.value(), ctx.energy_unit);
  r.result("T_hot", rec.t_hot.value(), ctx.temperature_unit);
  r.result("T_cold", rec.t_cold.value(), ctx.temperature_unit);
  r.result("entropy_removed_hot", rec.entropy_removed_hot.value(), "k");
  r.result("entropy_added_cold", rec.entropy_added_cold.value(), "k");
  r.result("net", rec.net.value(), "k");
  r.result("clausius_lower_bound", rec.clausius_lower_bound.value(), "k");
  r.verdict("clausius", rec.verdict);
  return r;
}

Report gas_metropolis(const GasArgs& a, const Context& ctx) {
  const Energy kT(ctx.consts.k_boltzmann * a.temperature);
  const twolevel::McConfig cfg{a.steps, a.burn_in, a.seed, kT};
  const auto stats = twolevel::metropolis_sample(a.L, ctx.epsilon, cfg);
  const double target = twolevel::occupation_from_temperature(
      a.L, ctx.epsilon, Temperature(a.temperature), ctx.consts);
  Report r("gas metropolis");
  r.input("L", a.L);
  r.input("temperature", a.temperature);
  r.input("steps", a.steps);
  r.input("burn_in", a.burn_in);
  r.input("seed", a.seed);
  echo_units(r, ctx);
  r.result("mean_n", stats.mean_n, "count");
  r.result("standard_error", stats.standard_error, "count");
  r.result("analytic_n", target, "count");
  r.result("mean_fraction", stats.mean_n / static_cast<double>(a.L), "1");
  r.result("samples", static_cast<double>(stats.samples), "step");
  r.result("min_n", static_cast<double>(stats.min_n), "count");
  r.result("max_n", static_cast<double>(stats.max_n), "count");
  r.result("final_n", static_cast<double>(stats.final_n), "count");
  r.result("acceptance_rate", stats.acceptance_rate, "1");
  return r;
}

// --------------------------------------------------------------- file

struct FileArgs {
  std::string input;
  std::string bit_order = "msb";
  int order = 3;
};

void add_stats(Report& r, const bitstream::FileStats& s) {
  r.result("L", static_cast<double>(s.L), "bit");
  r.result("n", static_cast<double>(s.n), "bit");
  r.result("p_hat", s.p_hat, "1");
  r.result("info_iid", s.info_iid.nats(), "nat");
  r.result("info_iid_bits", nats_to_bits(s.info_iid), "bit");
  if (s.info_rate_markov) {
    r.result("info_rate_markov", *s.info_rate_markov, "nat/bit");
    r.result("info_markov", *s.info_rate_markov * static_cast<double>(s.L), "nat");
  } else {
    r.label("info_rate_markov", "undecided");
  }
  r.result("correlation_lag1", s.correlation_lag1, "1");
  r.label("equilibrium", bitstream::to_string(s.equilibrium));
}

Report file_analyze(const FileArgs& a, const Context& ctx) {
  const auto stream = bitstream::read_bitstream(a.input, parse_bit_order(a.bit_order));
  const auto stats = bitstream::analyze(stream, a.order);
  Report r("file analyze");
  r.input("input", a.input);
  r.input("bit_order", a.bit_order);
  r.input("order", a.order);
  echo_units(r, ctx);
  add_stats(r, stats);
  // Temperature, heat and entropy exist only for a file in equilibrium.
  if (stats.equilibrium == bitstream::Equilibrium::random) {
    const auto [heat, entropy] = bitstream::file_heat_and_entropy(stats.L, ctx.epsilon);
    r.result("temperature", bitstream::file_temperature(ctx.epsilon, ctx.consts).value(),
             ctx.temperature_unit);
    r.result("average_nat_energy", bitstream::average_nat_energy(ctx.epsilon).value(),
             ctx.energy_unit);
    r.result("heat", heat.value(), ctx.energy_unit);
    r.result("entropy", entropy.value(), "k");
  }
  return r;
}

// ----------------------------------------------------------- generate

struct GenerateArgs {
  std::string kind = "bernoulli";
  double p = 0.5;
  double q = 0.5;
  std::int64_t length = 0;
  std::uint64_t seed = 0;
  std::string output;
  std::string bit_order = "msb";
};

Report generate_corpus(const GenerateArgs& a, const Context& ctx) {
  bitstream::GeneratorKind kind;
  if (a.kind == "bernoulli") {
    kind = bitstream::Bernoulli{a.p};
  } else if (a.kind == "markov") {
    kind = bitstream::Markov{a.q};
  } else if (a.kind == "ordered_block") {
    kind = bitstream::OrderedBlock{};
  } else {
    kind = bitstream::Alternating{};
  }
  const bitstream::GeneratorSpec spec{kind, a.length, a.seed};
  const auto stream = bitstream::generate(spec);
  bitstream::write_bitstream(stream, a.output, parse_bit_order(a.bit_order));

  Report r("generate");
  r.input("kind", a.kind);
  if (a.kind == "bernoulli") r.input("p", a.p);
  if (a.kind == "markov") r.input("q", a.q);
  r.input("length", a.length);
  r.input("seed", a.seed);
  r.input("output", a.output);
  r.input("bit_order", a.bit_order);
  echo_units(r, ctx);
  r.result("L", static_cast<double>(stream.size()), "bit");
  r.result("n", static_cast<double>(stream.ones()), "bit");
  r.result("bytes_written", static_cast<double>((stream.size() + 7) / 8), "byte");
  return r;
}

// ---------------------------------------------------------- broadcast

struct BroadcastArgs {
  std::string file;
  std::int64_t receivers = 1;
  int order = 3;
  std::string bit_order = "msb";
};

Report broadcast(const BroadcastArgs& a, const Context& ctx) {
  const auto stream = bitstream::read_bitstream(a.file, parse_bit_order(a.bit_order));
  const auto stats = bitstream::analyze(stream, a.order);
  const auto b = ledger::broadcast_balance(stats, ctx.epsilon, a.receivers, ctx.consts);
  const auto capacity = Entropy(static_cast<double>(stats.L) * kLn2);
  const auto check = ledger::clausius_check(capacity, b.info_sent);

  Report r("broadcast");
  r.input("file", a.file);
  r.input("receivers", a.receivers);
  r.input("order", a.order);
  r.input("bit_order", a.bit_order);
  echo_units(r, ctx);
  r.result("L", static_cast<double>(stats.L), "bit");
  r.label("equilibrium", bitstream::to_string(stats.equilibrium));
  r.result("T_hot", b.t_hot.value(), ctx.temperature_unit);
  r.result("T_cold", b.t_cold.value(), ctx.temperature_unit);
  r.result("info_sent", b.info_sent.nats(), "nat");
  r.label("info_source", ledger::to_string(b.info_source));
  r.result("entropy_removed", b.entropy_removed.value(), "k");
  r.result("entropy_deposited", b.entropy_deposited.value(), "k");
  r.result("net_gain", b.net_gain.value(), "k");
  r.result("clausius_margin", b.clausius_margin.value(), "k");
  r.verdict("informatic_clausius", check.verdict);
  return r;
}

// ------------------------------------------------------------- ledger

struct LedgerArgs {
  double entropy = 0.0;
  double info = 0.0;
  double heat = 0.0;
  double temperature = 1.0;
};

Report ledger_check(const LedgerArgs& a) {
  const auto c = ledger::clausius_check(Entropy(a.entropy), Information(a.info));
  Report r("ledger check");
  r.input("entropy", a.entropy);
  r.input("info", a.info);
  r.result("margin", c.margin.value(), "k");
  r.verdict("informatic_clausius", c.verdict);
  return r;
}

Report ledger_combined(const LedgerArgs& a, const Context& ctx) {
  const auto c = ledger::combined_balance(Energy(a.heat), Temperature(a.temperature),
                                          Information(a.info), Entropy(a.entropy), ctx.consts);
  Report r("ledger combined");
  r.input("heat", a.heat);
  r.input("temperature", a.temperature);
  r.input("info", a.info);
  r.input("entropy", a.entropy);
  r.input("units", to_string(ctx.consts.mode));
  r.result("entropy_lower_bound", c.entropy_lower_bound.value(), "k");
  r.result("entropy_actual", c.entropy_actual.value(), "k");
  r.result("margin", c.entropy_actual.value() - c.entropy_lower_bound.value(), "k");
  r.verdict("combined_clausius", c.verdict);
  return r;
}

// -------------------------------------------------------------- fiber

struct FiberArgs {
  double alpha = 0.0;
  double span_km = 0.0;
  std::int64_t spans = 1;
  std::int64_t length = 0;
  bool csv = false;
  std::string output;
  double t_hot = 0.0;
  double t_cold = 0.0;
  double q_cold = 0.0;
};

fiber::ChainResult run_chain(const FiberArgs& a, const Context& ctx) {
  const fiber::FiberChainConfig cfg{ctx.epsilon, a.alpha, a.span_km, a.spans, a.length};
  return fiber::simulate_chain(cfg, ctx.consts);
}

Report fiber_simulate(const FiberArgs& a, const Context& ctx, const fiber::ChainResult& chain) {
  Report r("fiber simulate");
  r.input("alpha", a.alpha);
  r.input("span_km", a.span_km);
  r.input("spans", a.spans);
  r.input("length", a.length);
  echo_units(r, ctx);
  const double g = std::exp(-a.alpha * a.span_km);
  r.result("span_gain", g, "1");
  r.result("total_work", chain.total_work.value(), ctx.energy_unit);
  r.result("info_in", chain.info_in.nats(), "nat");
  r.result("info_out", chain.info_out.nats(), "nat");
  if (!chain.cycles.empty()) {
    const auto& c = chain.cycles.front();
    r.result("T_hot", c.t_hot.value(), ctx.temperature_unit);
    r.result("T_cold", c.t_cold.value(), ctx.temperature_unit);
    r.result("Q_hot", c.q_hot.value(), ctx.energy_unit);
    r.result("Q_cold", c.q_cold.value(), ctx.energy_unit);
    r.result("work_per_cycle", c.work_in.value(), ctx.energy_unit);
    r.result("efficiency", fiber::carnot_efficiency(c.t_hot, c.t_cold), "1");
    Verdict worst = Verdict::satisfied;
    for (const auto& cyc : chain.cycles) {
      if (fiber::audit_cycle(cyc, ctx.consts).verdict == Verdict::violated) {
        worst = Verdict::violated;
      }
    }
    r.verdict("second_law", worst);
  }
  return r;
}

Report fiber_efficiency(const FiberArgs& a) {
  Report r("fiber efficiency");
  r.input("t_hot", a.t_hot);
  r.input("t_cold", a.t_cold);
  r.result("efficiency",
           fiber::carnot_efficiency(Temperature(a.t_hot), Temperature(a.t_cold)), "1");
  return r;
}

Report fiber_amplify(const FiberArgs& a, const Context& ctx) {
  const auto w = fiber::amplifier_work(Energy(a.q_cold), Temperature(a.t_hot),
                                       Temperature(a.t_cold));
  Report r("fiber amplify");
  r.input("q_cold", a.q_cold);
  r.input("t_hot", a.t_hot);
  r.input("t_cold", a.t_cold);
  r.input("units", to_string(ctx.consts.mode));
  r.result("Q_hot", w.q_hot.value(), ctx.energy_unit);
  r.result("work", w.work.value(), ctx.energy_unit);
  r.result("efficiency",
           fiber::carnot_efficiency(Temperature(a.t_hot), Temperature(a.t_cold)), "1");
  return r;
}

// ----------------------------------------------------------- landauer

struct LandauerArgs {
  double power = 0.0;
  double noise_temp = 0.0;
  double margin = 10.0;
  std::optional<double> bit_rate;
};

Report landauer_bound(const LandauerArgs& a) {
  const landauer::BoundQuery q{a.power, a.noise_temp, a.margin, a.bit_rate};
  const auto b = landauer::evaluate(q);
  Report r("landauer");
  r.input("power", a.power);
  r.input("noise_temp", a.noise_temp);
  r.input("margin", a.margin);
  if (a.bit_rate) r.input("bit_rate", *a.bit_rate);
  r.input("units", "si");
  r.result("f_max", b.max_bit_rate, "1/s");
  r.result("landauer_energy_per_bit", b.landauer_energy_per_bit, "J");
  r.result("energy_per_bit_at_max", b.energy_per_bit_at_max, "J");
  if (b.device_temperature) {
    r.result("device_temperature", *b.device_temperature, "K");
    r.result("energy_per_bit", *b.energy_per_bit, "J");
    r.verdict("computing_power_bound", *b.verdict);
  }
  return r;
}

bool has_flag(std::span<const std::string> args, const std::string& flag) {
  return std::any_of(args.begin(), args.end(), [&](const std::string& a) {
    return a == flag || a.rfind(flag + "=", 0) == 0;
  });
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::vector<std::string> apply_config(std::span<const std::string> args) {
  std::vector<std::string> out(args.begin(), args.end());
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (!path) return out;

  std::ifstream in(*path);
  require(static_cast<bool>(in), ErrorCode::io_error, "cannot open config " + *path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find('=');
    require(eq != std::string::npos, ErrorCode::invalid_argument,
            *path + ":" + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    require(!key.empty() && key != "config", ErrorCode::invalid_argument,
            *path + ":" + std::to_string(lineno) + ": invalid key");
    const std::string flag = "--" + key;
    if (has_flag(out, flag) || value == "false") continue;
    out.push_back(flag);
    if (value != "true") out.push_back(value);
  }
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  std::vector<std::string> expanded;
  try {
    expanded = apply_config(args);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Thermodynamics of information: two-level gases, files, broadcast ledgers, "
               "fiber Carnot cycles and the Landauer bound.",
               "infotherm"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  app.add_flag("--json", g.json, "Emit the report as one JSON document");
  app.add_option("--units", g.units, "Unit mode")
      ->check(CLI::IsMember({"reduced", "si"}));
  app.add_option("--epsilon", g.epsilon, "Bit/level energy in reduced units");
  app.add_option("--epsilon-joules", g.epsilon_joules, "Bit/level energy in joules (si mode)");
  app.add_option("--config", g.config, "key=value file; flags on the command line win");

  std::function<Report(const Context&)> handler;
  auto on = [&handler](CLI::App* sub, std::function<Report(const Context&)> h) {
    sub->callback([&handler, h = std::move(h)] { handler = h; });
  };

  // gas
  GasArgs gas;
  auto* gas_cmd = app.add_subcommand("gas", "Two-level gas thermodynamics");
  gas_cmd->require_subcommand(1);
  {
    auto* c = gas_cmd->add_subcommand("entropy", "Exact and Stirling entropy");
    c->add_option("--L", gas.L, "Number of states")->required();
    c->add_option("--n", gas.n, "Excited count")->required();
    on(c, [&](const Context& ctx) { return gas_entropy(gas, ctx); });
  }
  {
    auto* c = gas_cmd->add_subcommand("temperature", "Closed-form (and numeric) temperature");
    c->add_option("--L", gas.L, "Number of states")->required();
    c->add_option("--n", gas.n, "Excited count")->required();
    c->add_flag("--numeric", gas.numeric, "Also report the finite-difference estimate");
    on(c, [&](const Context& ctx) { return gas_temperature(gas, ctx); });
  }
  {
    auto* c = gas_cmd->add_subcommand("occupation", "Mean excited count at a temperature");
    c->add_option("--L", gas.L, "Number of states")->required();
    c->add_option("--temperature", gas.temperature, "Bath temperature")->required();
    on(c, [&](const Context& ctx) { return gas_occupation(gas, ctx); });
  }
  {
    auto* c = gas_cmd->add_subcommand("transfer", "Hot-to-cold bath entropy balance");
    c->add_option("--L", gas.L, "Number of states")->required();
    c->add_option("--n-hot", gas.n_hot, "Excited count in the hot bath")->required();
    c->add_option("--n-cold", gas.n_cold, "Excited count in the cold bath")->required();
    on(c, [&](const Context& ctx) { return gas_transfer(gas, ctx); });
  }
  {
    auto* c = gas_cmd->add_subcommand("metropolis", "Monte Carlo occupation at a temperature");
    c->add_option("--L", gas.L, "Number of states")->required();
    c->add_option("--temperature", gas.temperature, "Bath temperature")->required();
    c->add_option("--steps", gas.steps, "Total single-flip proposals")->capture_default_str();
    c->add_option("--burn-in", gas.burn_in, "Discarded initial steps")->capture_default_str();
    c->add_option("--seed", gas.seed, "RNG seed")->required();
    on(c, [&](const Context& ctx) { return gas_metropolis(gas, ctx); });
  }

  // file
  FileArgs file;
  auto* file_cmd = app.add_subcommand("file", "Binary file as a frozen two-level gas");
  file_cmd->require_subcommand(1);
  {
    auto* c = file_cmd->add_subcommand("analyze", "Bit statistics, information, equilibrium");
    c->add_option("--input", file.input, "Raw binary file")->required();
    c->add_option("--bit-order", file.bit_order, "Unpacking order")
        ->check(CLI::IsMember({"msb", "lsb"}));
    c->add_option("--order", file.order, "Markov order of the rate estimate")
        ->capture_default_str();
    on(c, [&](const Context& ctx) { return file_analyze(file, ctx); });
  }

  // generate
  GenerateArgs gen;
  {
    auto* c = app.add_subcommand("generate", "Write a synthetic bit corpus");
    c->add_option("--kind", gen.kind, "Generator")
        ->check(CLI::IsMember({"bernoulli", "markov", "ordered_block", "alternating"}));
    c->add_option("--p", gen.p, "Bernoulli ones probability");
    c->add_option("--q", gen.q, "Markov flip probability");
    c->add_option("--length", gen.length, "Length in bits")->required();
    c->add_option("--seed", gen.seed, "RNG seed");
    c->add_option("--output", gen.output, "Destination file")->required();
    c->add_option("--bit-order", gen.bit_order, "Packing order")
        ->check(CLI::IsMember({"msb", "lsb"}));
    on(c, [&](const Context& ctx) { return generate_corpus(gen, ctx); });
  }

  // broadcast
  BroadcastArgs bc;
  {
    auto* c = app.add_subcommand("broadcast", "One-to-N broadcast entropy balance");
    c->add_option("--file", bc.file, "Raw binary file")->required();
    c->add_option("--receivers", bc.receivers, "Receiver count N")->required();
    c->add_option("--order", bc.order, "Markov order for non-random files")
        ->capture_default_str();
    c->add_option("--bit-order", bc.bit_order, "Unpacking order")
        ->check(CLI::IsMember({"msb", "lsb"}));
    on(c, [&](const Context& ctx) { return broadcast(bc, ctx); });
  }

  // ledger
  LedgerArgs led;
  auto* ledger_cmd = app.add_subcommand("ledger", "Clausius audits");
  ledger_cmd->require_subcommand(1);
  {
    auto* c = ledger_cmd->add_subcommand("check", "dS >= k dI");
    c->add_option("--entropy", led.entropy, "Entropy change, k units")->required();
    c->add_option("--info", led.info, "Information change, nats")->required();
    on(c, [&](const Context&) { return ledger_check(led); });
  }
  {
    auto* c = ledger_cmd->add_subcommand("combined", "dS >= dQ/T + k dI");
    c->add_option("--heat", led.heat, "Heat dQ")->required();
    c->add_option("--temperature", led.temperature, "Bath temperature")->required();
    c->add_option("--info", led.info, "Information change, nats")->required();
    c->add_option("--entropy", led.entropy, "Actual entropy change, k units")->required();
    on(c, [&](const Context& ctx) { return ledger_combined(led, ctx); });
  }

  // fiber
  FiberArgs fib;
  std::optional<fiber::ChainResult> chain;
  auto* fiber_cmd = app.add_subcommand("fiber", "Amplified fiber link as a Carnot cycle");
  fiber_cmd->require_subcommand(1);
  {
    auto* c = fiber_cmd->add_subcommand("simulate", "Per-span four-step cycle records");
    c->add_option("--alpha", fib.alpha, "Attenuation per km")->required();
    c->add_option("--span-km", fib.span_km, "Amplifier spacing, km")->required();
    c->add_option("--spans", fib.spans, "Number of spans")->required();
    c->add_option("--length", fib.length, "File length in bits")->required();
    c->add_flag("--csv", fib.csv, "Write per-span CSV to stdout");
    c->add_option("--output", fib.output, "Write per-span CSV to this file");
    on(c, [&](const Context& ctx) {
      chain = run_chain(fib, ctx);
      return fiber_simulate(fib, ctx, *chain);
    });
  }
  {
    auto* c = fiber_cmd->add_subcommand("efficiency", "Carnot efficiency 1 - T_cold/T_hot");
    c->add_option("--t-hot", fib.t_hot, "Hot temperature")->required();
    c->add_option("--t-cold", fib.t_cold, "Cold temperature")->required();
    on(c, [&](const Context&) { return fiber_efficiency(fib); });
  }
  {
    auto* c = fiber_cmd->add_subcommand("amplify", "Heat and work of an ideal amplifier");
    c->add_option("--q-cold", fib.q_cold, "Heat read at the cold side")->required();
    c->add_option("--t-hot", fib.t_hot, "Hot temperature")->required();
    c->add_option("--t-cold", fib.t_cold, "Cold temperature")->required();
    on(c, [&](const Context& ctx) { return fiber_amplify(fib, ctx); });
  }

  // landauer
  LandauerArgs lan;
  {
    auto* c = app.add_subcommand("landauer", "Computing-power bound (always SI)");
    c->add_option("--power", lan.power, "Applied power, W")->required();
    c->add_option("--noise-temp", lan.noise_temp, "Noise temperature, K")->required();
    c->add_option("--margin", lan.margin, "Temperature margin over noise")
        ->capture_default_str();
    c->add_option("--bit-rate", lan.bit_rate, "Device bit rate to check, 1/s");
    on(c, [&](const Context&) { return landauer_bound(lan); });
  }

  std::vector<const char*> argv;
  argv.push_back("infotherm");
  for (const auto& a : expanded) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (!handler) {
    err << "usage error: no command given\n";
    return kExitUsage;
  }
  if (fib.csv && g.json) {
    err << "usage error: --csv and --json are mutually exclusive\n";
    return kExitUsage;
  }

  try {
    const Context ctx = make_context(g);
    const Report report = handler(ctx);
    if (chain && !fib.output.empty()) report::export_csv(chain->cycles, fib.output);
    if (fib.csv) {
      report::write_chain_csv(out, chain->cycles);
    } else if (g.json) {
      out << report.to_json().dump(2) << "\n";
    } else {
      report.write_text(out);
    }
    return report.any_violated() ? kExitViolated : kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace infotherm::cli
