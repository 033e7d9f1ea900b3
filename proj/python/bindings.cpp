#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "infotherm/bitstream.hpp"
#include "infotherm/cli.hpp"
#include "infotherm/core.hpp"
#include "infotherm/fiber.hpp"
#include "infotherm/landauer.hpp"
#include "infotherm/ledger.hpp"
#include "infotherm/twolevel.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace infotherm;

namespace {

PhysConstants units(const std::string& mode) {
  if (mode == "si") return PhysConstants::si();
  if (mode == "reduced") return PhysConstants::reduced();
  throw Error(ErrorCode::invalid_argument, "units must be 'si' or 'reduced'");
}

bitstream::BitOrder bit_order(const std::string& s) {
  if (s == "msb") return bitstream::BitOrder::msb_first;
  if (s == "lsb") return bitstream::BitOrder::lsb_first;
  throw Error(ErrorCode::invalid_argument, "bit_order must be 'msb' or 'lsb'");
}

twolevel::TwoLevelGas gas(std::int64_t L, std::int64_t n, double epsilon) {
  return {L, n, Energy(epsilon)};
}

py::dict stats_dict(const bitstream::FileStats& s) {
  py::dict d;
  d["L"] = s.L;
  d["n"] = s.n;
  d["p_hat"] = s.p_hat;
  d["info_iid"] = s.info_iid.nats();
  d["info_rate_markov"] = s.info_rate_markov;
  d["markov_order"] = s.markov_order;
  d["equilibrium"] = bitstream::to_string(s.equilibrium);
  d["correlation_lag1"] = s.correlation_lag1;
  return d;
}

bitstream::FileStats stats_from_bits(std::vector<std::uint8_t> bits, int order) {
  const bitstream::Bitstream stream(std::move(bits), bitstream::GeneratedSource{});
  return bitstream::analyze(stream, order);
}

bitstream::GeneratorSpec make_spec(const std::string& kind, std::int64_t length,
                                   std::uint64_t seed, double p, double q) {
  bitstream::GeneratorKind k;
  if (kind == "bernoulli") {
    k = bitstream::Bernoulli{p};
  } else if (kind == "markov") {
    k = bitstream::Markov{q};
  } else if (kind == "ordered_block") {
    k = bitstream::OrderedBlock{};
  } else if (kind == "alternating") {
    k = bitstream::Alternating{};
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown generator kind '" + kind + "'");
  }
  return {k, length, seed};
}

py::dict cycle_dict(const fiber::CycleRecord& c) {
  py::dict d;
  d["span"] = c.span_index;
  d["eps_in"] = c.eps_in.value();
  d["eps_out"] = c.eps_out.value();
  d["T_hot"] = c.t_hot.value();
  d["T_cold"] = c.t_cold.value();
  d["Q_hot"] = c.q_hot.value();
  d["Q_cold"] = c.q_cold.value();
  d["W"] = c.work_in.value();
  d["info"] = c.info.nats();
  py::list steps;
  for (const auto& s : c.steps) {
    py::dict sd;
    sd["kind"] = fiber::to_string(s.kind);
    sd["bit_energy_start"] = s.bit_energy_start.value();
    sd["bit_energy_end"] = s.bit_energy_end.value();
    sd["T_start"] = s.t_start.value();
    sd["T_end"] = s.t_end.value();
    sd["heat"] = s.heat.value();
    sd["work"] = s.work.value();
    sd["info"] = s.info.nats();
    steps.append(sd);
  }
  d["steps"] = steps;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Thermodynamics of information: two-level gases, binary files, Clausius "
            "ledgers, fiber Carnot cycles and the Landauer bound.";

  py::register_exception<Error>(m, "InfothermError", PyExc_ValueError);

  m.def("bits_to_nats", [](double b) { return bits_to_nats(b).nats(); }, py::arg("bits"));
  m.def("nats_to_bits", [](double n) { return nats_to_bits(Information(n)); }, py::arg("nats"));

  // two-level gas
  m.def("log_multiplicity", &twolevel::log_multiplicity, py::arg("L"), py::arg("n"));
  m.def(
      "entropy_exact",
      [](std::int64_t L, std::int64_t n) { return twolevel::entropy_exact(gas(L, n, 1.0)).value(); },
      py::arg("L"), py::arg("n"), "k ln C(L, n), in k units");
  m.def(
      "entropy_stirling",
      [](std::int64_t L, std::int64_t n) {
        return twolevel::entropy_stirling(gas(L, n, 1.0)).value();
      },
      py::arg("L"), py::arg("n"));
  m.def(
      "temperature_closed",
      [](std::int64_t L, std::int64_t n, double epsilon, const std::string& u) {
        return twolevel::temperature_closed(gas(L, n, epsilon), units(u)).value();
      },
      py::arg("L"), py::arg("n"), py::arg("epsilon") = 1.0, py::arg("units") = "reduced");
  m.def(
      "temperature_numeric",
      [](std::int64_t L, std::int64_t n, double epsilon, const std::string& u) {
        return twolevel::temperature_numeric(gas(L, n, epsilon), units(u)).value();
      },
      py::arg("L"), py::arg("n"), py::arg("epsilon") = 1.0, py::arg("units") = "reduced");
  m.def(
      "occupation_from_temperature",
      [](std::int64_t L, double epsilon, double T, const std::string& u) {
        return twolevel::occupation_from_temperature(L, Energy(epsilon), Temperature(T), units(u));
      },
      py::arg("L"), py::arg("epsilon"), py::arg("T"), py::arg("units") = "reduced");
  m.def(
      "transfer_balance",
      [](std::int64_t L, std::int64_t n_hot, std::int64_t n_cold, double epsilon) {
        const auto r = twolevel::transfer_balance(L, n_hot, n_cold, Energy(epsilon));
        py::dict d;
        d["gas_heat"] = r.gas_heat.value();
        d["entropy_removed_hot"] = r.entropy_removed_hot.value();
        d["entropy_added_cold"] = r.entropy_added_cold.value();
        d["net"] = r.net.value();
        d["clausius_lower_bound"] = r.clausius_lower_bound.value();
        d["T_hot"] = r.t_hot.value();
        d["T_cold"] = r.t_cold.value();
        d["verdict"] = to_string(r.verdict);
        return d;
      },
      py::arg("L"), py::arg("n_hot"), py::arg("n_cold"), py::arg("epsilon") = 1.0);
  m.def(
      "metropolis_sample",
      [](std::int64_t L, double epsilon, double kT, std::int64_t steps, std::int64_t burn_in,
         std::uint64_t seed) {
        const twolevel::McConfig cfg{steps, burn_in, seed, Energy(kT)};
        twolevel::McStatistics s{};
        {
          py::gil_scoped_release release;
          s = twolevel::metropolis_sample(L, Energy(epsilon), cfg);
        }
        py::dict d;
        d["mean_n"] = s.mean_n;
        d["standard_error"] = s.standard_error;
        d["samples"] = s.samples;
        d["min_n"] = s.min_n;
        d["max_n"] = s.max_n;
        d["final_n"] = s.final_n;
        d["acceptance_rate"] = s.acceptance_rate;
        return d;
      },
      py::arg("L"), py::arg("epsilon"), py::arg("kT"), py::arg("steps"), py::arg("burn_in"),
      py::arg("seed"));

  // files
  m.def(
      "generate",
      [](const std::string& kind, std::int64_t length, std::uint64_t seed, double p, double q) {
        const auto s = bitstream::generate(make_spec(kind, length, seed, p, q));
        return std::vector<std::uint8_t>(s.bits().begin(), s.bits().end());
      },
      py::arg("kind"), py::arg("length"), py::arg("seed") = 0, py::arg("p") = 0.5,
      py::arg("q") = 0.5, "Bits (0/1) of a synthetic corpus");
  m.def(
      "analyze",
      [](std::vector<std::uint8_t> bits, int order) {
        return stats_dict(stats_from_bits(std::move(bits), order));
      },
      py::arg("bits"), py::arg("order") = 3);
  m.def(
      "analyze_file",
      [](const std::string& path, int order, const std::string& order_name) {
        return stats_dict(bitstream::analyze(bitstream::read_bitstream(path, bit_order(order_name)),
                                             order));
      },
      py::arg("path"), py::arg("order") = 3, py::arg("bit_order") = "msb");
  m.def(
      "randomness_test",
      [](std::vector<std::uint8_t> bits) {
        const bitstream::Bitstream s(std::move(bits), bitstream::GeneratedSource{});
        return std::string(bitstream::to_string(bitstream::randomness_test(s)));
      },
      py::arg("bits"));
  m.def(
      "file_temperature",
      [](double epsilon, const std::string& u) {
        return bitstream::file_temperature(Energy(epsilon), units(u)).value();
      },
      py::arg("epsilon"), py::arg("units") = "reduced");
  m.def(
      "file_heat_and_entropy",
      [](std::int64_t L, double epsilon) {
        const auto r = bitstream::file_heat_and_entropy(L, Energy(epsilon));
        return py::make_tuple(r.heat.value(), r.entropy.value());
      },
      py::arg("L"), py::arg("epsilon"));

  // ledgers
  m.def(
      "broadcast_balance",
      [](std::vector<std::uint8_t> bits, double epsilon_hot, std::int64_t n_receivers, int order) {
        const auto stats = stats_from_bits(std::move(bits), order);
        const auto b = ledger::broadcast_balance(stats, Energy(epsilon_hot), n_receivers);
        py::dict d;
        d["n_receivers"] = b.n_receivers;
        d["T_hot"] = b.t_hot.value();
        d["T_cold"] = b.t_cold.value();
        d["info_sent"] = b.info_sent.nats();
        d["info_source"] = ledger::to_string(b.info_source);
        d["entropy_removed"] = b.entropy_removed.value();
        d["entropy_deposited"] = b.entropy_deposited.value();
        d["net_gain"] = b.net_gain.value();
        d["clausius_margin"] = b.clausius_margin.value();
        return d;
      },
      py::arg("bits"), py::arg("epsilon_hot"), py::arg("n_receivers"), py::arg("order") = 3);
  m.def(
      "clausius_check",
      [](double entropy, double info) {
        const auto c = ledger::clausius_check(Entropy(entropy), Information(info));
        return py::make_tuple(to_string(c.verdict), c.margin.value());
      },
      py::arg("entropy"), py::arg("info"));
  m.def(
      "combined_balance",
      [](double heat, double T, double info, double entropy) {
        const auto c =
            ledger::combined_balance(Energy(heat), Temperature(T), Information(info), Entropy(entropy));
        return py::make_tuple(to_string(c.verdict), c.entropy_lower_bound.value());
      },
      py::arg("heat"), py::arg("T"), py::arg("info"), py::arg("entropy"));

  // fiber
  m.def(
      "carnot_efficiency",
      [](double t_hot, double t_cold) {
        return fiber::carnot_efficiency(Temperature(t_hot), Temperature(t_cold));
      },
      py::arg("T_hot"), py::arg("T_cold"));
  m.def(
      "amplifier_work",
      [](double q_cold, double t_hot, double t_cold) {
        const auto w = fiber::amplifier_work(Energy(q_cold), Temperature(t_hot), Temperature(t_cold));
        return py::make_tuple(w.q_hot.value(), w.work.value());
      },
      py::arg("Q_cold"), py::arg("T_hot"), py::arg("T_cold"));
  m.def(
      "simulate_chain",
      [](double epsilon0, double alpha, double span_km, std::int64_t n_spans,
         std::int64_t file_length) {
        const fiber::FiberChainConfig cfg{Energy(epsilon0), alpha, span_km, n_spans, file_length};
        const auto r = fiber::simulate_chain(cfg);
        py::dict d;
        py::list cycles;
        for (const auto& c : r.cycles) cycles.append(cycle_dict(c));
        d["cycles"] = cycles;
        d["total_work"] = r.total_work.value();
        d["info_in"] = r.info_in.nats();
        d["info_out"] = r.info_out.nats();
        return d;
      },
      py::arg("epsilon0"), py::arg("alpha"), py::arg("span_km"), py::arg("n_spans"),
      py::arg("file_length"));

  // landauer
  m.def(
      "device_temperature",
      [](double power, double bit_rate) {
        return landauer::device_temperature(power, bit_rate).value();
      },
      py::arg("power"), py::arg("bit_rate"));
  m.def("max_bit_rate", &landauer::max_bit_rate, py::arg("power"), py::arg("noise_temperature"),
        py::arg("margin") = 10.0);
  m.def("landauer_floor", &landauer::landauer_floor, py::arg("temperature"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI invocation; returns (exit_code, stdout, stderr)");

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
