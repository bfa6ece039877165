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

#include <gtest/gtest.h>

#include <algorithm>
#include <limits>
#include <random>

#include "fixtures.hpp"
#include "ppmsched/errors.hpp"
#include "ppmsched/grouping.hpp"
#include "ppmsched/harness.hpp"
#include "test_util.hpp"

namespace ppmsched {
namespace {

// Minimal number of contiguous segments such that each segment is
// pairwise commuting and, if enforced, within budget.
std::size_t dp_min_segments(const std::vector<PauliString> &seq, const PortBudget *b) {
  const std::size_t m = seq.size();
  const auto ok = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i)
      for (std::size_t j = i + 1; j < hi; ++j)
        if (!commutes(seq[i], seq[j])) return false;
    if (!b) return true;
    const std::size_t n = seq[lo].num_qubits();
    for (std::size_t q = 0; q < n; ++q) {
      int dx = 0, dz = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        dx += has_x(seq[i][q]);
        dz += has_z(seq[i][q]);
      }
      if (dx > b->bx || dz > b->bz) return false;
    }
    return true;
  };
  std::vector<std::size_t> best(m + 1, std::numeric_limits<std::size_t>::max());
  best[0] = 0;
  for (std::size_t hi = 1; hi <= m; ++hi)
    for (std::size_t lo = 0; lo < hi; ++lo)
      if (best[lo] != std::numeric_limits<std::size_t>::max() && ok(lo, hi)) best[hi] = std::min(best[hi], best[lo] + 1);
  return best[m];
}

bool preserves_order(const Grouping &g, std::size_t m) {
  std::size_t next = 0;
  for (const auto &group : g.groups)
    for (std::size_t i : group)
      if (i != next++) return false;
  return next == m;
}

std::vector<PauliString> random_sequence(std::size_t n, std::size_t m, double density, std::uint64_t seed) {
  return gen_random_ppms({n, m, density, seed, false}).sequence();
}

TEST(PortDemand, Examples) {
  const std::vector<PauliString> xx{parse_pauli("X"), parse_pauli("X")};
  const PortDemand d = port_demand(xx);
  EXPECT_EQ(d.dx(0), 2);
  EXPECT_EQ(d.dz(0), 0);
  const std::vector<PauliString> y{parse_pauli("Y")};
  EXPECT_EQ(port_demand(y).dx(0), 1);
  EXPECT_EQ(port_demand(y).dz(0), 1);
  const auto seq = testing::hot_qubit_instance().sequence();
  const PortDemand hot = port_demand(seq);
  EXPECT_EQ(hot.dx(2), 3);
  EXPECT_EQ(hot.dz(2), 1);
  EXPECT_EQ(hot.excess({2, 2}), 1);
  EXPECT_EQ(hot.dz(4), 1);
}

TEST(PortDemand, MixedLengthsThrow) {
  const std::vector<PauliString> bad{parse_pauli("X"), parse_pauli("XX")};
  EXPECT_THROW(port_demand(bad), DimensionError);
}

TEST(PortDemand, AddRemoveSymmetric) {
  std::mt19937_64 rng(1);
  PortDemand d(5);
  std::vector<PauliString> added;
  for (int i = 0; i < 20; ++i) {
    added.push_back(testing::random_pauli(5, rng));
    d.add(added.back());
  }
  for (const auto &p : added) d.remove(p);
  for (std::size_t q = 0; q < 5; ++q) {
    EXPECT_EQ(d.dx(q), 0);
    EXPECT_EQ(d.dz(q), 0);
  }
}

TEST(FitsBudget, Boundaries) {
  const std::vector<PauliString> empty;
  EXPECT_TRUE(fits_budget(empty, parse_pauli("YYY"), {2, 2}));
  const std::vector<PauliString> two_x{parse_pauli("XI"), parse_pauli("XZ")};
  EXPECT_FALSE(fits_budget(two_x, parse_pauli("XI"), {2, 2}));
  EXPECT_TRUE(fits_budget(two_x, parse_pauli("ZI"), {2, 2}));
  EXPECT_FALSE(fits_budget(two_x, parse_pauli("YI"), {2, 2}));
  EXPECT_TRUE(fits_budget(two_x, parse_pauli("XI"), {3, 1}));
}

TEST(PortBudget, Validate) {
  EXPECT_THROW((PortBudget{0, 2}).validate(), ValidationError);
  EXPECT_NO_THROW(PortBudget::unlimited().validate());
}

TEST(GreedyCliques, Examples) {
  const std::vector<PauliString> commuting{parse_pauli("XX"), parse_pauli("ZZ"), parse_pauli("YY")};
  EXPECT_EQ(greedy_cliques(commuting).depth(), 1u);
  const std::vector<PauliString> alt{parse_pauli("X"), parse_pauli("Z"), parse_pauli("X"), parse_pauli("Z")};
  EXPECT_EQ(greedy_cliques(alt).depth(), 4u);
  EXPECT_EQ(greedy_cliques(std::vector<PauliString>{}).depth(), 0u);
}

TEST(GreedyCliques, MatchesSegmentationOracle) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto seq = random_sequence(3 + s % 5, 20, 0.3, s);
    const Grouping g = greedy_cliques(seq);
    EXPECT_EQ(g.depth(), dp_min_segments(seq, nullptr)) << "seed " << s;
    EXPECT_TRUE(preserves_order(g, seq.size()));
  }
}

TEST(HwGreedy, HotQubitInstance) {
  const auto seq = testing::hot_qubit_instance().sequence();
  EXPECT_EQ(hw_greedy(seq, {2, 2}).depth(), 2u);
  EXPECT_EQ(hw_greedy(seq, {3, 3}).depth(), 1u);
  EXPECT_EQ(baseline_grouping(testing::hot_qubit_instance(), {2, 2}).depth(), 2u);
}

TEST(HwGreedy, DisjointSupports) {
  std::vector<PauliString> seq;
  for (std::size_t q = 0; q < 10; ++q) seq.push_back(PauliString::single(10, q, Pauli::Y));
  EXPECT_EQ(hw_greedy(seq, {1, 1}).depth(), 1u);
  EXPECT_EQ(baseline_grouping(seq, {1, 1}).depth(), 1u);
}

TEST(HwGreedy, MatchesSegmentationOracle) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const PortBudget b{1 + static_cast<int>(s % 3), 1 + static_cast<int>((s / 3) % 3)};
    const auto seq = random_sequence(4 + s % 4, 20, 0.2, 1000 + s);
    EXPECT_EQ(hw_greedy(seq, b).depth(), dp_min_segments(seq, &b)) << "seed " << s;
  }
}

TEST(Baseline, WitnessDiffersFromHwGreedy) {
  const auto seq = testing::split_witness();
  EXPECT_TRUE(commutes(seq[0], seq[1]));
  EXPECT_FALSE(commutes(seq[0], seq[2]));
  EXPECT_TRUE(commutes(seq[1], seq[2]));
  EXPECT_EQ(baseline_grouping(seq, {1, 1}).depth(), 3u);
  EXPECT_EQ(hw_greedy(seq, {1, 1}).depth(), 2u);
}

TEST(Partitioners, Properties) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const double density = 0.1 + 0.1 * static_cast<double>(s % 6);
    const auto seq = random_sequence(6 + s % 15, 80, density, 5000 + s);
    const PortBudget b{1 + static_cast<int>(s % 4), 1 + static_cast<int>((s / 4) % 4)};
    const Grouping cliques = greedy_cliques(seq), hw = hw_greedy(seq, b), base = baseline_grouping(seq, b);
    for (const Grouping *g : {&cliques, &hw, &base}) EXPECT_TRUE(preserves_order(*g, seq.size()));
    EXPECT_TRUE(is_feasible(seq, hw, b));
    EXPECT_TRUE(is_feasible(seq, base, b));
    EXPECT_TRUE(is_feasible(seq, cliques, PortBudget::unlimited()));
    EXPECT_GE(hw.depth(), cliques.depth());
    EXPECT_LE(hw.depth(), base.depth());
    EXPECT_EQ(hw_greedy(seq, PortBudget::unlimited()), cliques);
    EXPECT_EQ(baseline_grouping(seq, PortBudget::unlimited()), cliques);
    EXPECT_LE(hw_greedy(seq, {b.bx + 1, b.bz}).depth(), hw.depth());
    EXPECT_LE(hw_greedy(seq, {b.bx, b.bz + 1}).depth(), hw.depth());
  }
}

TEST(Feasibility, DetectsViolations) {
  const std::vector<PauliString> seq{parse_pauli("X"), parse_pauli("X"), parse_pauli("Z")};
  EXPECT_TRUE(is_feasible(seq, Grouping{{{0, 1}, {2}}}, {2, 2}));
  EXPECT_FALSE(is_feasible(seq, Grouping{{{0, 1}, {2}}}, {1, 1}));
  EXPECT_FALSE(is_feasible(seq, Grouping{{{0}, {1, 2}}}, {2, 2}));
  EXPECT_FALSE(is_feasible(seq, Grouping{{{0}, {2}}}, {2, 2}));
}

TEST(Metrics, Weights) {
  const PpmCircuit c = testing::hot_qubit_instance();
  const Grouping g = hw_greedy(c.sequence(), {2, 2});
  const Metrics m = metrics(c, g);
  EXPECT_EQ(m.depth, 2u);
  EXPECT_EQ(m.total_weight_program, 10u);
  EXPECT_EQ(m.total_weight_all, 14u);
  const std::vector<PauliString> one{parse_pauli("XYZ")};
  EXPECT_EQ(metrics(one, 3, greedy_cliques(one)).total_weight_program, 3u);
}

TEST(Metrics, EmitReparseHotInstance) {
  const PpmCircuit c = testing::hot_qubit_instance();
  EXPECT_EQ(parse_ppm_text(emit_ppm_text(c)), c);
}

}  // namespace
}  // namespace ppmsched
