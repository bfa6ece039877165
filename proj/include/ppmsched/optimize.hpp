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

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "ppmsched/circuit.hpp"
#include "ppmsched/grouping.hpp"
#include "ppmsched/pauli.hpp"

namespace ppmsched {

enum class Strategy { Baseline, GreedyRestructure, Reshuffle, Combined };
enum class Mapper { CliqueSplit, HwGreedy };

std::string_view to_string(Strategy s);
std::string_view to_string(Mapper m);
/// Accepts "baseline", "greedy" (or "greedy-restructure"), "reshuffle", "combined".
Strategy parse_strategy(std::string_view s);
/// Accepts "clique-split" (or "clique-then-split") and "hw-greedy".
Mapper parse_mapper(std::string_view s);

struct StrategyConfig {
  Strategy strategy = Strategy::Combined;
  std::size_t passes = 3;
  std::uint64_t seed = 0;
  PortBudget budget{};
  Mapper mapper = Mapper::HwGreedy;
  /// Pass t continues from pass t-1's output; otherwise every pass starts
  /// from the input order with its own stream.
  bool chain_passes = true;
};

struct RestructureMove {
  std::size_t target;
  std::size_t multiplier;
  friend bool operator==(const RestructureMove &, const RestructureMove &) = default;
};

/// Each clique member appears in at most one move, in either role.
struct RestructurePlan {
  std::vector<RestructureMove> moves;
  bool empty() const { return moves.empty(); }
};

struct RestructureResult {
  std::vector<PauliString> clique;
  RestructurePlan plan;
};

/// Replaces clique[m.target] with clique[m.target] * clique[m.multiplier] for
/// every move, always multiplying by the original members.
std::vector<PauliString> apply_plan(std::span<const PauliString> clique, const RestructurePlan &plan);

/// One left-to-right sweep that swaps each commuting adjacent pair with
/// probability 1/2. Decisions are drawn from rng in index order.
template <std::uniform_random_bit_generator Rng>
std::vector<PauliString> reshuffle_pass(std::span<const PauliString> seq, Rng &rng) {
  std::vector<PauliString> out(seq.begin(), seq.end());
  for (std::size_t i = 0; i + 1 < out.size(); ++i) {
    if (!commutes(out[i], out[i + 1])) continue;
    if (((rng() - Rng::min()) & 1u) != 0) std::swap(out[i], out[i + 1]);
  }
  return out;
}

/// Greedy generator restructuring of one commuting clique: repeatedly applies
/// the legal move with the largest strict drop in port excess (ties: larger
/// total-weight drop, then smallest (target, multiplier)).
RestructureResult restructure_clique(std::span<const PauliString> clique, const PortBudget &b);

/// Minimum hw_greedy depth over every restructure plan and every member
/// ordering. Exponential; refuses cliques larger than kBruteForceLimit.
inline constexpr std::size_t kBruteForceLimit = 6;
std::size_t brute_force_restructure(std::span<const PauliString> clique, const PortBudget &b);

/// hw_greedy depth of a single clique after the greedy restructure, or of the
/// clique as given when that is no worse.
std::size_t restructured_clique_depth(std::span<const PauliString> clique, const PortBudget &b);

struct StrategyResult {
  Grouping grouping;
  std::vector<PauliString> sequence;
  Metrics metrics;
  /// 0 is the input order; t >= 1 is the t-th reshuffled order.
  std::size_t candidate = 0;
  bool restructured = false;
};

StrategyResult run_strategy(std::span<const PauliString> seq, std::size_t num_program, const StrategyConfig &cfg);
StrategyResult run_strategy(const PpmCircuit &c, const StrategyConfig &cfg);

}  // namespace ppmsched
