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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances and ensemble sizes are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "ppmsched/compile.hpp"
#include "ppmsched/grouping.hpp"
#include "ppmsched/harness.hpp"
#include "ppmsched/optimize.hpp"
#include "ppmsched/seed.hpp"
#include "ppmsched/sim.hpp"
#include "test_util.hpp"

namespace {

using namespace ppmsched;
using Clock = std::chrono::steady_clock;

constexpr double kCompileTol = 1e-9;
constexpr double kHotRuntimeMs = 1.0;
constexpr double kCompileRuntimeS = 30.0;
constexpr double kSweepRuntimeS = 120.0;
constexpr double kBandLo = 2.0, kBandHi = 15.0;
constexpr double kSaturationPts = 5.0;
constexpr std::uint64_t kMasterSeed = 2024;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(const char *f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome hot_qubit() {
  const PpmCircuit c = testing::hot_qubit_instance();
  const auto start = Clock::now();
  const StrategyResult base = run_strategy(c, {Strategy::Baseline});
  const StrategyResult comb = run_strategy(c, {Strategy::Combined});
  const double ms = seconds_since(start) * 1e3;
  const auto r = restructure_clique(c.sequence(), {2, 2});
  const bool ok = base.metrics.depth == 2 && comb.metrics.depth == 1 && r.plan.moves.size() == 1 &&
                  ms < kHotRuntimeMs && is_feasible(comb.sequence, comb.grouping, {2, 2});
  return {ok, fmt("baseline=%zu combined=%zu moves=%zu runtime=%.3fms", base.metrics.depth, comb.metrics.depth,
                  r.plan.moves.size(), ms)};
}

Outcome dominance() {
  std::size_t count = 0, violations = 0, strict = 0;
  for (double density : {0.1, 0.3, 0.6})
    for (std::size_t n : {8, 20})
      for (std::size_t m : {50, 200})
        for (std::uint64_t s = 0; s < 17; ++s) {
          const std::uint64_t seed = derive_seed(kMasterSeed, {1, count});
          const PpmCircuit c = gen_random_ppms({n, m, density, seed, true});
          const std::size_t base = run_strategy(c, {Strategy::Baseline}).metrics.depth;
          const std::size_t comb = run_strategy(c, {Strategy::Combined, 3, seed}).metrics.depth;
          violations += comb > base;
          strict += comb < base;
          ++count;
        }
  return {count >= 200 && violations == 0,
          fmt("instances=%zu violations=%zu strictly_better=%zu", count, violations, strict)};
}

Outcome semantic_compilation() {
  std::mt19937_64 rng(derive_seed(kMasterSeed, {2}));
  const auto start = Clock::now();
  std::size_t failures = 0;
  double worst = 0;
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 5, gates = 1 + rng() % 40;
    GateCircuit c{n, {}};
    for (std::size_t i = 0; i < gates; ++i) {
      if (rng() % 4 == 0)
        c.ops.emplace_back(ZRotation{rng() % n, (rng() & 1u) ? RotationAngle::t() : RotationAngle::tdg()});
      else
        c.ops.emplace_back(testing::random_gate(n, rng));
    }
    const auto check = sim::check_compilation<double>(c, compile_to_pprs(c), kCompileTol);
    failures += !check.ok();
    worst = std::max(worst, check.max_deviation);
  }
  const double secs = seconds_since(start);
  return {failures == 0 && secs < kCompileRuntimeS,
          fmt("circuits=100 failures=%zu max_deviation=%.2e runtime=%.2fs", failures, worst, secs)};
}

struct SampledClique {
  std::vector<PauliString> members;
  std::size_t num_program;
};

// Over-budget cliques at (2,2) taken from the unconstrained partition of
// random tailed instances.
std::vector<SampledClique> sample_cliques(std::size_t want, std::size_t min_size, std::size_t max_size,
                                          std::uint64_t tag) {
  std::vector<SampledClique> out;
  for (std::uint64_t s = 0; out.size() < want; ++s) {
    const std::uint64_t seed = derive_seed(kMasterSeed, {tag, s});
    const std::size_t n = 3 + seed % 6;
    const double density = 0.15 + 0.05 * static_cast<double>((seed >> 8) % 6);
    const PpmCircuit c = gen_random_ppms({n, 60, density, seed, true});
    const auto seq = c.sequence();
    for (const auto &group : greedy_cliques(seq).groups) {
      if (group.size() < min_size || group.size() > max_size) continue;
      SampledClique k{{}, c.num_program};
      for (std::size_t i : group) k.members.push_back(seq[i]);
      if (port_demand(k.members).within({2, 2})) continue;
      out.push_back(std::move(k));
      if (out.size() == want) break;
    }
  }
  return out;
}

Outcome generator_soundness() {
  const auto cliques = sample_cliques(600, 3, std::numeric_limits<std::size_t>::max(), 3);
  std::size_t bad_span = 0, bad_tail = 0, moved = 0;
  for (const auto &[clique, num_program] : cliques) {
    const RestructureResult r = restructure_clique(clique, {2, 2});
    moved += !r.plan.empty();
    bad_span += !(mutually_commuting(r.clique) && span_equal(clique, r.clique));
    const PortDemand d = port_demand(r.clique);
    for (std::size_t q = num_program; q < d.num_qubits(); ++q) bad_tail += d.dz(q) > 2;
  }
  return {cliques.size() >= 500 && bad_span == 0 && bad_tail == 0,
          fmt("cliques=%zu restructured=%zu span_failures=%zu tail_over_2=%zu", cliques.size(), moved, bad_span,
              bad_tail)};
}

Outcome oracle_gap() {
  const auto cliques = sample_cliques(200, 3, 5, 5);
  std::size_t order_violations = 0, improved = 0;
  double gap = 0;
  for (const auto &k : cliques) {
    const PortBudget b{2, 2};
    const std::size_t plain = hw_greedy(k.members, b).depth();
    const std::size_t greedy = restructured_clique_depth(k.members, b);
    const std::size_t best = brute_force_restructure(k.members, b);
    order_violations += !(best <= greedy && greedy <= plain);
    improved += greedy < plain;
    gap += static_cast<double>(greedy - std::min(greedy, best));
  }
  return {order_violations == 0, fmt("cliques=%zu violations=%zu greedy_improved=%zu mean_gap=%.4f", cliques.size(),
                                      order_violations, improved, gap / static_cast<double>(cliques.size()))};
}

// Ports sweep on the n=20, M=200, density 0.3 ensemble; the value-2 cell is
// also the (2,2) band ensemble.
struct PortSweep {
  std::map<int, double> mean_reduction;
  double seconds = 0;
  std::size_t violations = 0;
};

const PortSweep &port_sweep() {
  static const PortSweep result = [] {
    SweepConfig cfg;
    cfg.axis = SweepAxis::Ports;
    cfg.values = {2, 4, 8, 16, 20, 24};
    cfg.trials = 25;
    cfg.base = {20, 200, 0.3, kMasterSeed, true};
    cfg.strategies = {StrategyConfig{Strategy::Combined, 3}};
    const auto start = Clock::now();
    const auto rows = run_sweep(cfg);
    PortSweep out;
    out.seconds = seconds_since(start);
    std::map<int, std::size_t> counts;
    for (const ResultRow &r : rows) {
      out.mean_reduction[r.bx] += r.depth_reduction_pct;
      ++counts[r.bx];
      out.violations += r.depth > r.baseline_depth;
    }
    for (auto &[bx, sum] : out.mean_reduction) sum /= static_cast<double>(counts[bx]);
    return out;
  }();
  return result;
}

Outcome random_sweep_band() {
  const PortSweep &s = port_sweep();
  const double r2 = s.mean_reduction.at(2);
  return {r2 >= kBandLo && r2 <= kBandHi && s.seconds < kSweepRuntimeS,
          fmt("mean_reduction(2,2)=%.3f%% band=[%.0f,%.0f] runtime=%.2fs", r2, kBandLo, kBandHi, s.seconds)};
}

Outcome port_trend() {
  const PortSweep &s = port_sweep();
  const double r2 = s.mean_reduction.at(2), r20 = s.mean_reduction.at(20), r24 = s.mean_reduction.at(24);
  std::string curve;
  for (const auto &[bx, r] : s.mean_reduction) curve += fmt(" %d:%.2f", bx, r);
  return {r20 >= r2 && std::abs(r24 - r20) <= kSaturationPts,
          fmt("r(20)>=r(2): %.3f vs %.3f; |r(24)-r(20)|=%.3f; curve%s", r20, r2, std::abs(r24 - r20), curve.c_str())};
}

Outcome passes_monotone() {
  std::size_t instances = 0, violations = 0;
  for (double density : {0.1, 0.3, 0.6})
    for (std::size_t n : {8, 20})
      for (std::uint64_t s = 0; s < 10; ++s) {
        const std::uint64_t seed = derive_seed(kMasterSeed, {6, instances});
        const PpmCircuit c = gen_random_ppms({n, 200, density, seed, true});
        std::size_t prev = std::numeric_limits<std::size_t>::max();
        for (std::size_t k = 0; k <= 6; ++k) {
          const std::size_t d = run_strategy(c, {Strategy::Combined, k, seed}).metrics.depth;
          violations += d > prev;
          prev = d;
        }
        ++instances;
      }
  return {violations == 0, fmt("instances=%zu passes=0..6 violations=%zu", instances, violations)};
}

Outcome end_to_end() {
  const std::filesystem::path dir = PPMSCHED_TEST_DATA;
  std::string detail;
  bool ok = true;
  std::size_t files = 0;
  for (const char *name : {"ghz_t.qasm", "toffoli_ladder.qasm", "qft5_rz.qasm"}) {
    const GateCircuit g = parse_qasm_file((dir / name).string());
    const CompiledCircuit compiled = compile_to_pprs(g);
    const bool sound = sim::check_compilation<double>(g, compiled, kCompileTol).ok();
    const PpmCircuit c = attach_resource_states(compiled);
    const std::size_t base = run_strategy(c, {Strategy::Baseline}).metrics.depth;
    const StrategyResult comb = run_strategy(c, {Strategy::Combined, 3, kMasterSeed});
    ok = ok && sound && comb.metrics.depth <= base && is_feasible(comb.sequence, comb.grouping, {2, 2});
    const double red = base ? 100.0 * static_cast<double>(base - comb.metrics.depth) / static_cast<double>(base) : 0;
    detail += fmt("%s%s: ppms=%zu baseline=%zu combined=%zu (%.1f%%)", files ? "; " : "", name, c.ppms.size(), base,
                  comb.metrics.depth, red);
    ++files;
  }
  return {ok, detail};
}

Outcome determinism() {
  SweepConfig cfg;
  cfg.axis = SweepAxis::Density;
  cfg.values = {0.1, 0.3, 0.6};
  cfg.trials = 6;
  cfg.base = {20, 200, 0.3, kMasterSeed, true};
  cfg.strategies = {StrategyConfig{Strategy::Baseline}, StrategyConfig{Strategy::GreedyRestructure},
                    StrategyConfig{Strategy::Reshuffle}, StrategyConfig{Strategy::Combined}};
  cfg.threads = 1;
  const std::string a = emit_results(run_sweep(cfg), ResultFormat::Csv);
  const std::string b = emit_results(run_sweep(cfg), ResultFormat::Csv);
  cfg.threads = 4;
  const std::string c = emit_results(run_sweep(cfg), ResultFormat::Csv);
  return {a == b && a == c, fmt("rows=%zu bytes=%zu threads1==threads1:%d threads1==threads4:%d",
                                static_cast<std::size_t>(std::count(a.begin(), a.end(), '\n') - 1), a.size(),
                                a == b, a == c)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria{
      {"hot-qubit instance: baseline 2, combined 1, <1ms", hot_qubit},
      {"dominance: combined <= baseline on every instance", dominance},
      {"semantic compilation within 1e-9", semantic_compilation},
      {"generator-set soundness", generator_soundness},
      {"oracle gap: brute <= greedy <= plain", oracle_gap},
      {"random-sweep mean reduction in [2%, 15%]", random_sweep_band},
      {"port-budget trend and saturation", port_trend},
      {"passes monotonicity", passes_monotone},
      {"end-to-end QASM pipeline (benchmark substitute)", end_to_end},
      {"determinism across runs and threads", determinism},
  };
  int failures = 0;
  for (const auto &[name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s  %-52s %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
