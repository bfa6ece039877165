// Copyright 2026 The ppmsched Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: compile, optimize, random, sweep, verify.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ppmsched/circuit.hpp"
#include "ppmsched/compile.hpp"
#include "ppmsched/harness.hpp"
#include "ppmsched/optimize.hpp"
#include "ppmsched/sim.hpp"

namespace {

using namespace ppmsched;

void write_output(const std::string &path, const std::string &text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("error writing " + path);
}

ResultFormat parse_format(const std::string &s) {
  if (s == "csv") return ResultFormat::Csv;
  if (s == "jsonl" || s == "json-lines") return ResultFormat::JsonLines;
  throw ValidationError("unknown format '" + s + "'");
}

std::string schedule_text(const StrategyResult &r, std::size_t num_program) {
  std::string out;
  for (std::size_t g = 0; g < r.grouping.groups.size(); ++g) {
    out += "# group " + std::to_string(g) + "\n";
    for (std::size_t i : r.grouping.groups[g]) out += "PPM " + to_string(r.sequence[i], num_program) + "\n";
  }
  return out;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Port-constrained scheduling of Pauli product measurements"};
  app.require_subcommand(1);

  std::string compile_in, compile_out;
  auto *compile = app.add_subcommand("compile", "Compile a Clifford+T/Rz QASM circuit into PPMs");
  compile->add_option("qasm", compile_in, "Input QASM file")->required();
  compile->add_option("-o,--output", compile_out, "Output PPM file (stdout if omitted)");

  std::string opt_in, opt_out, opt_strategy = "combined", opt_mapper = "hw-greedy", opt_format = "csv", opt_schedule;
  StrategyConfig opt_cfg;
  bool opt_independent = false;
  auto *optimize = app.add_subcommand("optimize", "Schedule a PPM file under a port budget");
  optimize->add_option("ppm", opt_in, "Input PPM file")->required();
  optimize->add_option("--strategy", opt_strategy, "baseline|greedy|reshuffle|combined")->capture_default_str();
  optimize->add_option("--passes", opt_cfg.passes, "Reshuffle passes")->capture_default_str();
  optimize->add_option("--ports-x", opt_cfg.budget.bx, "X ports per qubit")->capture_default_str();
  optimize->add_option("--ports-z", opt_cfg.budget.bz, "Z ports per qubit")->capture_default_str();
  optimize->add_option("--seed", opt_cfg.seed, "RNG seed")->capture_default_str();
  optimize->add_option("--mapper", opt_mapper, "clique-split|hw-greedy")->capture_default_str();
  optimize->add_flag("--independent-passes", opt_independent, "Start every reshuffle pass from the input order");
  optimize->add_option("--out", opt_out, "Results file (stdout if omitted)");
  optimize->add_option("--format", opt_format, "csv|jsonl")->capture_default_str();
  optimize->add_option("--schedule", opt_schedule, "Write the grouped schedule to this file");

  RandomSpec rnd;
  std::string rnd_out;
  bool rnd_no_resources = false;
  auto *random = app.add_subcommand("random", "Generate a random PPM circuit");
  random->add_option("--qubits", rnd.num_qubits)->required();
  random->add_option("--ppms", rnd.num_ppms)->required();
  random->add_option("--density", rnd.density)->required();
  random->add_option("--seed", rnd.seed)->capture_default_str();
  random->add_flag("--no-resources", rnd_no_resources, "Omit resource-state tails");
  random->add_option("-o,--output", rnd_out, "Output PPM file (stdout if omitted)");

  std::string sweep_cfg, sweep_out, sweep_format = "csv";
  std::size_t sweep_threads = 0;
  auto *sweep = app.add_subcommand("sweep", "Run a parameter sweep over random instances");
  sweep->add_option("--config", sweep_cfg, "Sweep config file")->required();
  sweep->add_option("--out", sweep_out, "Results file (stdout if omitted)");
  sweep->add_option("--format", sweep_format, "csv|jsonl")->capture_default_str();
  sweep->add_option("--threads", sweep_threads, "Override the config's thread count");

  std::string verify_in;
  auto *verify = app.add_subcommand("verify", "Check a compilation against dense matrices (at most 5 qubits)");
  verify->add_option("qasm", verify_in, "Input QASM file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compile) {
      const GateCircuit circuit = parse_qasm_file(compile_in);
      const CompiledCircuit compiled = compile_to_pprs(circuit);
      write_output(compile_out, emit_ppm_text(attach_resource_states(compiled)));
      std::cerr << "compiled " << circuit.ops.size() << " ops into " << compiled.pprs.size() << " rotations and "
                << compiled.terminal.size() << " terminal measurements\n";
    } else if (*optimize) {
      const PpmCircuit circuit = parse_ppm_file(opt_in);
      opt_cfg.strategy = parse_strategy(opt_strategy);
      opt_cfg.mapper = parse_mapper(opt_mapper);
      opt_cfg.chain_passes = !opt_independent;
      opt_cfg.budget.validate();
      const auto rows = evaluate_instance(circuit, {opt_cfg.seed, measured_density(circuit)}, {opt_cfg},
                                          opt_cfg.budget, true);
      write_output(opt_out, emit_results(rows, parse_format(opt_format)));
      if (!opt_schedule.empty()) {
        write_output(opt_schedule, schedule_text(run_strategy(circuit, opt_cfg), circuit.num_program));
      }
      const ResultRow &r = rows.front();
      std::cerr << r.strategy << ": depth " << r.depth << " (baseline " << r.baseline_depth << ", "
                << r.depth_reduction_pct << "% reduction)\n";
    } else if (*random) {
      rnd.attach_resources = !rnd_no_resources;
      write_output(rnd_out, emit_ppm_text(gen_random_ppms(rnd)));
    } else if (*sweep) {
      SweepConfig cfg = parse_sweep_config(read_file(sweep_cfg));
      if (sweep_threads > 0) cfg.threads = sweep_threads;
      write_output(sweep_out, emit_results(run_sweep(cfg), parse_format(sweep_format)));
    } else if (*verify) {
      const GateCircuit circuit = parse_qasm_file(verify_in);
      if (circuit.num_qubits > 5) throw SizeLimitError("verify supports at most 5 qubits");
      const CompiledCircuit compiled = compile_to_pprs(circuit);
      const auto check = sim::check_compilation<double>(circuit, compiled, 1e-9);
      std::cout << "unitary:  " << (check.unitary_ok ? "ok" : "MISMATCH") << '\n'
                << "tableau:  " << (check.tableau_ok ? "ok" : "MISMATCH") << '\n'
                << "terminal: " << (check.terminal_ok ? "ok" : "MISMATCH") << '\n'
                << "max deviation: " << check.max_deviation << '\n';
      return check.ok() ? 0 : 1;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
