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

#include "ppmsched/optimize.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <iterator>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "ppmsched/errors.hpp"
#include "ppmsched/seed.hpp"

namespace ppmsched {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Baseline:
      return "baseline";
    case Strategy::GreedyRestructure:
      return "greedy";
    case Strategy::Reshuffle:
      return "reshuffle";
    case Strategy::Combined:
      return "combined";
  }
  return "?";
}

std::string_view to_string(Mapper m) { return m == Mapper::CliqueSplit ? "clique-split" : "hw-greedy"; }

Strategy parse_strategy(std::string_view s) {
  if (s == "baseline") return Strategy::Baseline;
  if (s == "greedy" || s == "greedy-restructure") return Strategy::GreedyRestructure;
  if (s == "reshuffle") return Strategy::Reshuffle;
  if (s == "combined") return Strategy::Combined;
  throw ValidationError("unknown strategy '" + std::string(s) + "'");
}

Mapper parse_mapper(std::string_view s) {
  if (s == "clique-split" || s == "clique-then-split") return Mapper::CliqueSplit;
  if (s == "hw-greedy") return Mapper::HwGreedy;
  throw ValidationError("unknown mapper '" + std::string(s) + "'");
}

std::vector<PauliString> apply_plan(std::span<const PauliString> clique, const RestructurePlan &plan) {
  std::vector<PauliString> out(clique.begin(), clique.end());
  for (const RestructureMove &m : plan.moves) {
    out[m.target] = multiply(clique[m.target], clique[m.multiplier]);
  }
  return out;
}

namespace {

long penalty(int demand, int limit) { return std::max(0, demand - limit); }

struct MoveScore {
  long excess = 0;
  long weight = 0;
};

// Change in port excess and total weight if member i is replaced by i * j.
// Only the columns where j is active can change.
MoveScore score_move(const PauliString &pi, const PauliString &pj, const PortDemand &d, const PortBudget &b) {
  MoveScore s;
  pj.for_each_active([&](std::size_t q, Pauli lj) {
    const Pauli a = pi[q];
    const Pauli c = static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(lj));
    const int dx = d.dx(q), dz = d.dz(q);
    const int ndx = dx - has_x(a) + has_x(c);
    const int ndz = dz - has_z(a) + has_z(c);
    s.excess += penalty(ndx, b.bx) - penalty(dx, b.bx) + penalty(ndz, b.bz) - penalty(dz, b.bz);
    s.weight += static_cast<long>(c != Pauli::I) - static_cast<long>(a != Pauli::I);
  });
  return s;
}

bool touches_overloaded(const PauliString &p, const PortDemand &d, const PortBudget &b) {
  bool hit = false;
  p.for_each_active([&](std::size_t q, Pauli) {
    if (d.dx(q) > b.bx || d.dz(q) > b.bz) hit = true;
  });
  return hit;
}

void require_commuting(std::span<const PauliString> clique, const char *who) {
  if (!mutually_commuting(clique)) throw PreconditionError(std::string(who) + ": clique members do not commute");
}

}  // namespace

RestructureResult restructure_clique(std::span<const PauliString> clique, const PortBudget &b) {
  b.validate();
  require_commuting(clique, "restructure_clique");
  RestructureResult out{std::vector<PauliString>(clique.begin(), clique.end()), {}};
  if (clique.empty()) return out;

  PortDemand demand = port_demand(clique);
  std::vector<bool> used(clique.size(), false);
  for (;;) {
    if (demand.within(b)) break;
    bool found = false;
    RestructureMove best{0, 0};
    MoveScore best_score;
    for (std::size_t j = 0; j < clique.size(); ++j) {
      if (used[j] || !touches_overloaded(clique[j], demand, b)) continue;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        if (i == j || used[i]) continue;
        const MoveScore s = score_move(out.clique[i], clique[j], demand, b);
        if (s.excess >= 0) continue;
        const auto key = std::tuple(s.excess, s.weight, i, j);
        if (!found || key < std::tuple(best_score.excess, best_score.weight, best.target, best.multiplier)) {
          found = true;
          best = {i, j};
          best_score = s;
        }
      }
    }
    if (!found) break;
    demand.remove(out.clique[best.target]);
    out.clique[best.target] *= clique[best.multiplier];
    demand.add(out.clique[best.target]);
    used[best.target] = used[best.multiplier] = true;
    out.plan.moves.push_back(best);
  }
  return out;
}

namespace {

void enumerate_plans(std::size_t n, std::vector<bool> &taken, RestructurePlan &plan,
                     const std::function<void(const RestructurePlan &)> &visit, std::size_t start) {
  std::size_t i = start;
  while (i < n && taken[i]) ++i;
  if (i >= n) {
    visit(plan);
    return;
  }
  taken[i] = true;
  enumerate_plans(n, taken, plan, visit, i + 1);
  for (std::size_t k = i + 1; k < n; ++k) {
    if (taken[k]) continue;
    taken[k] = true;
    for (const RestructureMove m : {RestructureMove{i, k}, RestructureMove{k, i}}) {
      plan.moves.push_back(m);
      enumerate_plans(n, taken, plan, visit, i + 1);
      plan.moves.pop_back();
    }
    taken[k] = false;
  }
  taken[i] = false;
}

}  // namespace

std::size_t brute_force_restructure(std::span<const PauliString> clique, const PortBudget &b) {
  b.validate();
  if (clique.size() > kBruteForceLimit) {
    throw SizeLimitError("brute_force_restructure: clique of " + std::to_string(clique.size()) +
                         " exceeds the limit of " + std::to_string(kBruteForceLimit));
  }
  require_commuting(clique, "brute_force_restructure");
  if (clique.empty()) return 0;

  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<bool> taken(clique.size(), false);
  RestructurePlan plan;
  std::vector<PauliString> ordered(clique.size(), PauliString());
  enumerate_plans(
      clique.size(), taken, plan,
      [&](const RestructurePlan &p) {
        const std::vector<PauliString> members = apply_plan(clique, p);
        std::vector<std::size_t> order(members.size());
        std::iota(order.begin(), order.end(), 0);
        do {
          for (std::size_t k = 0; k < order.size(); ++k) ordered[k] = members[order[k]];
          best = std::min(best, hw_greedy(ordered, b).depth());
        } while (best > 1 && std::next_permutation(order.begin(), order.end()));
      },
      0);
  return best;
}

std::size_t restructured_clique_depth(std::span<const PauliString> clique, const PortBudget &b) {
  const std::size_t plain = hw_greedy(clique, b).depth();
  const RestructureResult r = restructure_clique(clique, b);
  return std::min(plain, hw_greedy(r.clique, b).depth());
}

namespace {

struct Candidate {
  std::vector<PauliString> sequence;
  Grouping grouping;
  std::size_t weight = 0;
  bool restructured = false;
};

std::size_t program_total(std::span<const PauliString> seq, std::size_t num_program) {
  std::size_t total = 0;
  for (const PauliString &p : seq) total += program_weight(p, num_program);
  return total;
}

Grouping map_sequence(std::span<const PauliString> seq, const StrategyConfig &cfg) {
  return cfg.mapper == Mapper::CliqueSplit ? baseline_grouping(seq, cfg.budget) : hw_greedy(seq, cfg.budget);
}

Candidate plain_candidate(std::vector<PauliString> order, std::size_t num_program, const StrategyConfig &cfg) {
  Candidate c;
  c.grouping = map_sequence(order, cfg);
  c.weight = program_total(order, num_program);
  c.sequence = std::move(order);
  return c;
}

// Restructure every commuting clique of the order, keeping a clique's
// rewrite only when it maps no worse, then keep the better of the rewritten
// and untouched sequences.
Candidate restructure_candidate(std::vector<PauliString> order, std::size_t num_program, const StrategyConfig &cfg) {
  std::vector<PauliString> rewritten;
  rewritten.reserve(order.size());
  bool changed = false;
  const std::span<const PauliString> all(order);
  for (const auto &clique : greedy_cliques(order).groups) {
    const auto members = all.subspan(clique.front(), clique.size());
    RestructureResult r = restructure_clique(members, cfg.budget);
    bool take = false;
    if (!r.plan.empty()) {
      const std::size_t before = hw_greedy(members, cfg.budget).depth();
      const std::size_t after = hw_greedy(r.clique, cfg.budget).depth();
      take = after < before ||
             (after == before && program_total(r.clique, num_program) < program_total(members, num_program));
    }
    if (take) {
      changed = true;
      std::move(r.clique.begin(), r.clique.end(), std::back_inserter(rewritten));
    } else {
      rewritten.insert(rewritten.end(), members.begin(), members.end());
    }
  }

  Candidate plain = plain_candidate(std::move(order), num_program, cfg);
  if (!changed) return plain;
  Candidate alt = plain_candidate(std::move(rewritten), num_program, cfg);
  alt.restructured = true;
  const auto key = [](const Candidate &c) { return std::pair(c.grouping.depth(), c.weight); };
  return key(alt) < key(plain) ? std::move(alt) : std::move(plain);
}

}  // namespace

StrategyResult run_strategy(std::span<const PauliString> seq, std::size_t num_program, const StrategyConfig &cfg) {
  cfg.budget.validate();
  std::vector<PauliString> input(seq.begin(), seq.end());

  if (cfg.strategy == Strategy::Baseline) {
    StrategyResult r;
    r.grouping = baseline_grouping(input, cfg.budget);
    r.metrics = metrics(input, num_program, r.grouping);
    r.sequence = std::move(input);
    return r;
  }

  const bool reshuffles = cfg.strategy == Strategy::Reshuffle || cfg.strategy == Strategy::Combined;
  const bool restructures = cfg.strategy == Strategy::GreedyRestructure || cfg.strategy == Strategy::Combined;
  const std::size_t num_candidates = 1 + (reshuffles ? cfg.passes : 0);

  std::vector<PauliString> order = input;
  Candidate best;
  std::size_t best_index = 0;
  for (std::size_t t = 0; t < num_candidates; ++t) {
    if (t > 0) {
      auto rng = make_stream(cfg.seed, {t});
      order = reshuffle_pass(std::span<const PauliString>(cfg.chain_passes ? order : input), rng);
    }
    Candidate c = restructures ? restructure_candidate(order, num_program, cfg)
                               : plain_candidate(order, num_program, cfg);
    if (t == 0 || c.grouping.depth() < best.grouping.depth()) {
      best = std::move(c);
      best_index = t;
    }
  }

  StrategyResult r;
  r.metrics = metrics(best.sequence, num_program, best.grouping);
  r.grouping = std::move(best.grouping);
  r.sequence = std::move(best.sequence);
  r.candidate = best_index;
  r.restructured = best.restructured;
  return r;
}

StrategyResult run_strategy(const PpmCircuit &c, const StrategyConfig &cfg) {
  return run_strategy(c.sequence(), c.num_program, cfg);
}

}  // namespace ppmsched
