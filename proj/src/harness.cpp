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

#include "ppmsched/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <exception>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "ppmsched/errors.hpp"
#include "ppmsched/seed.hpp"

namespace ppmsched {

void RandomSpec::validate() const {
  if (!(density > 0.0 && density <= 1.0)) throw ValidationError("density must lie in (0, 1]");
  if (num_ppms < 1) throw ValidationError("need at least one PPM");
  if (num_qubits < 1) throw ValidationError("need at least one qubit");
}

PpmCircuit gen_random_ppms(const RandomSpec &spec) {
  spec.validate();
  std::mt19937_64 rng(spec.seed);
  const auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

  PpmCircuit out;
  out.num_program = spec.num_qubits;
  out.num_resource = spec.attach_resources ? spec.num_ppms : 0;
  out.ppms.reserve(spec.num_ppms);
  static constexpr Pauli kLetters[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (std::size_t i = 0; i < spec.num_ppms; ++i) {
    PauliString p(out.width());
    do {
      for (std::size_t q = 0; q < spec.num_qubits; ++q) {
        p.set(q, uniform01() < spec.density ? kLetters[rng() % 3] : Pauli::I);
      }
    } while (p.is_identity_letters());
    std::optional<std::size_t> resource;
    if (spec.attach_resources) {
      p.set(spec.num_qubits + i, Pauli::Z);
      resource = i;
    }
    out.ppms.push_back(Ppm{std::move(p), resource});
  }
  return out;
}

std::string_view to_string(SweepAxis a) {
  switch (a) {
    case SweepAxis::Density:
      return "density";
    case SweepAxis::Qubits:
      return "qubits";
    case SweepAxis::InputDepth:
      return "input-depth";
    case SweepAxis::Ports:
      return "ports";
    case SweepAxis::Passes:
      return "passes";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view s) {
  for (SweepAxis a : {SweepAxis::Density, SweepAxis::Qubits, SweepAxis::InputDepth, SweepAxis::Ports, SweepAxis::Passes}) {
    if (to_string(a) == s) return a;
  }
  throw ValidationError("unknown sweep axis '" + std::string(s) + "'");
}

void SweepConfig::validate() const {
  if (values.empty()) throw ValidationError("sweep needs at least one value");
  if (trials < 1) throw ValidationError("sweep needs at least one trial");
  if (strategies.empty()) throw ValidationError("sweep needs at least one strategy");
  budget.validate();
  for (double v : values) {
    if (axis == SweepAxis::Density) {
      if (!(v > 0.0 && v <= 1.0)) throw ValidationError("density values must lie in (0, 1]");
    } else if (v < (axis == SweepAxis::Passes ? 0.0 : 1.0) || v != std::floor(v)) {
      throw ValidationError("values for axis " + std::string(to_string(axis)) + " must be integers >= " +
                            (axis == SweepAxis::Passes ? "0" : "1"));
    }
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string_view::npos) comma = s.size();
    std::string item = trim(s.substr(pos, comma - pos));
    if (!item.empty()) out.push_back(std::move(item));
    pos = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line, const std::string &key) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, "bad value '" + std::string(s) + "' for " + key);
  }
  return v;
}

bool parse_bool(std::string_view s, std::size_t line, const std::string &key) {
  if (s == "1" || s == "true" || s == "yes" || s == "on") return true;
  if (s == "0" || s == "false" || s == "no" || s == "off") return false;
  throw ParseError(line, "bad boolean '" + std::string(s) + "' for " + key);
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

double reduction_pct(std::size_t base, std::size_t value) {
  if (base == 0) return 0.0;
  return 100.0 * (static_cast<double>(base) - static_cast<double>(value)) / static_cast<double>(base);
}

}  // namespace

SweepConfig parse_sweep_config(std::string_view text) {
  SweepConfig cfg;
  bool have_axis = false;
  std::vector<std::string> raw_values;
  std::vector<std::string> strategy_names = {"baseline", "greedy", "reshuffle", "combined"};
  std::size_t passes = 3;
  Mapper mapper = Mapper::HwGreedy;
  bool chain = true;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key=value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    try {
      if (key == "axis") {
        if (have_axis) throw ParseError(line_no, "axis given twice");
        cfg.axis = parse_axis(value);
        have_axis = true;
      } else if (key == "values") {
        raw_values = split_list(value);
      } else if (key == "trials") {
        cfg.trials = parse_number<std::size_t>(value, line_no, key);
      } else if (key == "seed") {
        cfg.base.seed = parse_number<std::uint64_t>(value, line_no, key);
      } else if (key == "qubits") {
        cfg.base.num_qubits = parse_number<std::size_t>(value, line_no, key);
      } else if (key == "ppms") {
        cfg.base.num_ppms = parse_number<std::size_t>(value, line_no, key);
      } else if (key == "density") {
        cfg.base.density = parse_number<double>(value, line_no, key);
      } else if (key == "resources") {
        cfg.base.attach_resources = parse_bool(value, line_no, key);
      } else if (key == "strategies") {
        strategy_names = split_list(value);
      } else if (key == "passes") {
        passes = parse_number<std::size_t>(value, line_no, key);
      } else if (key == "ports_x") {
        cfg.budget.bx = parse_number<int>(value, line_no, key);
      } else if (key == "ports_z") {
        cfg.budget.bz = parse_number<int>(value, line_no, key);
      } else if (key == "mapper") {
        mapper = parse_mapper(value);
      } else if (key == "chain") {
        chain = parse_bool(value, line_no, key);
      } else if (key == "threads") {
        cfg.threads = parse_number<std::size_t>(value, line_no, key);
      } else if (key == "timing") {
        cfg.timing = parse_bool(value, line_no, key);
      } else {
        throw ParseError(line_no, "unknown key '" + key + "'");
      }
    } catch (const ValidationError &e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!have_axis) throw ValidationError("sweep config has no axis=");
  if (raw_values.empty()) throw ValidationError("sweep config has no values=");
  for (const std::string &v : raw_values) cfg.values.push_back(parse_number<double>(v, 0, "values"));
  for (const std::string &name : strategy_names) {
    StrategyConfig s;
    s.strategy = parse_strategy(name);
    s.passes = passes;
    s.mapper = mapper;
    s.chain_passes = chain;
    s.budget = cfg.budget;
    cfg.strategies.push_back(s);
  }
  cfg.validate();
  cfg.base.validate();
  return cfg;
}

const std::vector<std::string> &result_columns() {
  static const std::vector<std::string> cols = {
      "strategy", "seed",           "n_qubits",        "density",      "n_ppms",
      "bx",       "bz",             "passes",          "depth",        "baseline_depth",
      "depth_reduction_pct", "total_weight", "baseline_weight", "weight_reduction_pct", "runtime_ms"};
  return cols;
}

double measured_density(const PpmCircuit &c) {
  if (c.ppms.empty() || c.num_program == 0) return 0.0;
  std::size_t total = 0;
  for (const Ppm &m : c.ppms) total += program_weight(m.pauli, c.num_program);
  return static_cast<double>(total) / static_cast<double>(c.ppms.size() * c.num_program);
}

std::vector<ResultRow> evaluate_instance(const PpmCircuit &circuit, const InstanceInfo &info,
                                         const std::vector<StrategyConfig> &strategies, const PortBudget &budget,
                                         bool timing) {
  using Clock = std::chrono::steady_clock;
  const auto seq = circuit.sequence();
  const auto elapsed_ms = [&](Clock::time_point start) {
    return timing ? std::chrono::duration<double, std::milli>(Clock::now() - start).count() : 0.0;
  };

  StrategyConfig base_cfg;
  base_cfg.strategy = Strategy::Baseline;
  base_cfg.budget = budget;
  const auto base_start = Clock::now();
  const StrategyResult base = run_strategy(seq, circuit.num_program, base_cfg);
  const double base_ms = elapsed_ms(base_start);

  std::vector<ResultRow> rows;
  rows.reserve(strategies.size());
  for (StrategyConfig cfg : strategies) {
    cfg.budget = budget;
    ResultRow row;
    row.strategy = std::string(to_string(cfg.strategy));
    row.seed = info.seed;
    row.n_qubits = circuit.num_program;
    row.density = info.density;
    row.n_ppms = circuit.ppms.size();
    row.bx = budget.bx;
    row.bz = budget.bz;
    row.baseline_depth = base.metrics.depth;
    row.baseline_weight = base.metrics.total_weight_program;
    if (cfg.strategy == Strategy::Baseline) {
      row.depth = base.metrics.depth;
      row.total_weight = base.metrics.total_weight_program;
      row.runtime_ms = base_ms;
    } else {
      row.passes = cfg.passes;
      const auto start = Clock::now();
      const StrategyResult r = run_strategy(seq, circuit.num_program, cfg);
      row.runtime_ms = elapsed_ms(start);
      row.depth = r.metrics.depth;
      row.total_weight = r.metrics.total_weight_program;
    }
    row.depth_reduction_pct = reduction_pct(row.baseline_depth, row.depth);
    row.weight_reduction_pct = reduction_pct(row.baseline_weight, row.total_weight);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ResultRow> run_sweep(const SweepConfig &cfg) {
  cfg.validate();
  const std::size_t num_cells = cfg.values.size() * cfg.trials;
  const bool shapes_instance =
      cfg.axis == SweepAxis::Density || cfg.axis == SweepAxis::Qubits || cfg.axis == SweepAxis::InputDepth;

  std::vector<std::vector<ResultRow>> results(num_cells);
  std::vector<std::exception_ptr> errors(num_cells);

  const auto run_cell = [&](std::size_t cell) {
    const std::size_t vi = cell / cfg.trials;
    const std::size_t trial = cell % cfg.trials;
    const double value = cfg.values[vi];

    RandomSpec spec = cfg.base;
    PortBudget budget = cfg.budget;
    std::vector<StrategyConfig> strategies = cfg.strategies;
    switch (cfg.axis) {
      case SweepAxis::Density:
        spec.density = value;
        break;
      case SweepAxis::Qubits:
        spec.num_qubits = static_cast<std::size_t>(value);
        break;
      case SweepAxis::InputDepth:
        spec.num_ppms = static_cast<std::size_t>(value);
        break;
      case SweepAxis::Ports:
        budget = {static_cast<int>(value), static_cast<int>(value)};
        break;
      case SweepAxis::Passes:
        for (auto &s : strategies) s.passes = static_cast<std::size_t>(value);
        break;
    }
    // Axes that leave the instance alone reuse one ensemble across values, so
    // rows for different values compare the same circuits and seed streams.
    spec.seed = derive_seed(cfg.base.seed, {shapes_instance ? vi : 0, trial});
    for (std::size_t si = 0; si < strategies.size(); ++si) strategies[si].seed = derive_seed(spec.seed, {si});

    const PpmCircuit circuit = gen_random_ppms(spec);
    results[cell] = evaluate_instance(circuit, {spec.seed, spec.density}, strategies, budget, cfg.timing);
  };

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t cell = next++; cell < num_cells; cell = next++) {
      try {
        run_cell(cell);
      } catch (...) {
        errors[cell] = std::current_exception();
      }
    }
  };
  const std::size_t num_threads = std::max<std::size_t>(1, std::min(cfg.threads, num_cells));
  if (num_threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < num_threads; ++t) pool.emplace_back(worker);
  }

  std::vector<ResultRow> rows;
  for (std::size_t cell = 0; cell < num_cells; ++cell) {
    if (errors[cell]) {
      const std::string where = "sweep cell (" + std::string(to_string(cfg.axis)) + "=" +
                                format_double(cfg.values[cell / cfg.trials]) +
                                ", trial=" + std::to_string(cell % cfg.trials) + ")";
      try {
        std::rethrow_exception(errors[cell]);
      } catch (const std::exception &e) {
        throw std::runtime_error(where + ": " + e.what());
      }
    }
    for (auto &row : results[cell]) rows.push_back(std::move(row));
  }
  return rows;
}

std::string emit_results(const std::vector<ResultRow> &rows, ResultFormat format) {
  std::ostringstream out;
  if (format == ResultFormat::Csv) {
    const auto &cols = result_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
    for (const ResultRow &r : rows) {
      out << r.strategy << ',' << r.seed << ',' << r.n_qubits << ',' << format_double(r.density) << ','
          << r.n_ppms << ',' << r.bx << ',' << r.bz << ',' << r.passes << ',' << r.depth << ','
          << r.baseline_depth << ',' << format_double(r.depth_reduction_pct) << ',' << r.total_weight << ','
          << r.baseline_weight << ',' << format_double(r.weight_reduction_pct) << ','
          << format_double(r.runtime_ms) << '\n';
    }
    return out.str();
  }
  for (const ResultRow &r : rows) {
    nlohmann::ordered_json j;
    j["strategy"] = r.strategy;
    j["seed"] = r.seed;
    j["n_qubits"] = r.n_qubits;
    j["density"] = r.density;
    j["n_ppms"] = r.n_ppms;
    j["bx"] = r.bx;
    j["bz"] = r.bz;
    j["passes"] = r.passes;
    j["depth"] = r.depth;
    j["baseline_depth"] = r.baseline_depth;
    j["depth_reduction_pct"] = r.depth_reduction_pct;
    j["total_weight"] = r.total_weight;
    j["baseline_weight"] = r.baseline_weight;
    j["weight_reduction_pct"] = r.weight_reduction_pct;
    j["runtime_ms"] = r.runtime_ms;
    out << j.dump() << '\n';
  }
  return out.str();
}

std::vector<ResultRow> parse_results_csv(std::string_view text) {
  std::vector<ResultRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const auto &cols = result_columns();
    if (!header_seen) {
      if (fields.size() != cols.size() || !std::equal(fields.begin(), fields.end(), cols.begin())) {
        throw ParseError(line_no, "unexpected CSV header");
      }
      header_seen = true;
      continue;
    }
    if (fields.size() != cols.size()) throw ParseError(line_no, "wrong field count");
    ResultRow r;
    std::size_t f = 0;
    r.strategy = std::string(fields[f++]);
    r.seed = parse_number<std::uint64_t>(fields[f++], line_no, "seed");
    r.n_qubits = parse_number<std::size_t>(fields[f++], line_no, "n_qubits");
    r.density = parse_number<double>(fields[f++], line_no, "density");
    r.n_ppms = parse_number<std::size_t>(fields[f++], line_no, "n_ppms");
    r.bx = parse_number<int>(fields[f++], line_no, "bx");
    r.bz = parse_number<int>(fields[f++], line_no, "bz");
    r.passes = parse_number<std::size_t>(fields[f++], line_no, "passes");
    r.depth = parse_number<std::size_t>(fields[f++], line_no, "depth");
    r.baseline_depth = parse_number<std::size_t>(fields[f++], line_no, "baseline_depth");
    r.depth_reduction_pct = parse_number<double>(fields[f++], line_no, "depth_reduction_pct");
    r.total_weight = parse_number<std::size_t>(fields[f++], line_no, "total_weight");
    r.baseline_weight = parse_number<std::size_t>(fields[f++], line_no, "baseline_weight");
    r.weight_reduction_pct = parse_number<double>(fields[f++], line_no, "weight_reduction_pct");
    r.runtime_ms = parse_number<double>(fields[f++], line_no, "runtime_ms");
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw ParseError(line_no, "missing CSV header");
  return rows;
}

}  // namespace ppmsched
