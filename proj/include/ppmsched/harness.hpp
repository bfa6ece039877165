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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ppmsched/circuit.hpp"
#include "ppmsched/grouping.hpp"
#include "ppmsched/optimize.hpp"

namespace ppmsched {

struct RandomSpec {
  std::size_t num_qubits = 20;
  std::size_t num_ppms = 200;
  /// Probability that a given qubit carries a non-identity letter.
  double density = 0.3;
  std::uint64_t seed = 0;
  bool attach_resources = true;

  void validate() const;
};

/// Each string draws every qubit independently: non-identity with
/// probability density, letter uniform over {X, Y, Z}. All-identity draws
/// are redrawn. With attach_resources, string i gets a Z tail on resource i.
PpmCircuit gen_random_ppms(const RandomSpec &spec);

enum class SweepAxis { Density, Qubits, InputDepth, Ports, Passes };

std::string_view to_string(SweepAxis a);
SweepAxis parse_axis(std::string_view s);

struct SweepConfig {
  SweepAxis axis = SweepAxis::Density;
  std::vector<double> values;
  std::size_t trials = 1;
  RandomSpec base;
  /// Budget for every row of a cell, baseline included. A ports sweep sets
  /// bx = bz = value.
  PortBudget budget{};
  /// seed and budget of each entry are replaced per cell; a passes sweep
  /// also replaces passes.
  std::vector<StrategyConfig> strategies;
  std::size_t threads = 1;
  /// Record wall-clock runtime_ms. Off by default so output is reproducible
  /// byte for byte.
  bool timing = false;

  void validate() const;
};

/// Parses the line-oriented key=value sweep file. Recognised keys: axis,
/// values, trials, seed, qubits, ppms, density, resources, strategies,
/// passes, ports_x, ports_z, mapper, chain, threads, timing.
SweepConfig parse_sweep_config(std::string_view text);

struct ResultRow {
  std::string strategy;
  std::uint64_t seed = 0;
  std::size_t n_qubits = 0;
  double density = 0.0;
  std::size_t n_ppms = 0;
  int bx = 0;
  int bz = 0;
  std::size_t passes = 0;
  std::size_t depth = 0;
  std::size_t baseline_depth = 0;
  double depth_reduction_pct = 0.0;
  std::size_t total_weight = 0;
  std::size_t baseline_weight = 0;
  double weight_reduction_pct = 0.0;
  double runtime_ms = 0.0;

  friend bool operator==(const ResultRow &, const ResultRow &) = default;
};

/// Column order of the CSV header and JSON-lines field names.
const std::vector<std::string> &result_columns();

struct InstanceInfo {
  std::uint64_t seed = 0;
  double density = 0.0;
};

/// Runs the baseline once and every strategy on one circuit under a shared
/// budget, one row per strategy.
std::vector<ResultRow> evaluate_instance(const PpmCircuit &circuit, const InstanceInfo &info,
                                         const std::vector<StrategyConfig> &strategies, const PortBudget &budget,
                                         bool timing);

/// Rows ordered by (axis value, trial, strategy) regardless of threads.
std::vector<ResultRow> run_sweep(const SweepConfig &cfg);

enum class ResultFormat { Csv, JsonLines };

std::string emit_results(const std::vector<ResultRow> &rows, ResultFormat format);
std::vector<ResultRow> parse_results_csv(std::string_view text);

/// Mean non-identity fraction over the program columns.
double measured_density(const PpmCircuit &c);

}  // namespace ppmsched
