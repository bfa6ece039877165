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
#include <limits>
#include <span>
#include <vector>

#include "ppmsched/circuit.hpp"
#include "ppmsched/pauli.hpp"

namespace ppmsched {

/// Per-qubit limit on simultaneous X-type and Z-type port use.
struct PortBudget {
  int bx = 2;
  int bz = 2;

  static constexpr PortBudget unlimited() {
    return {std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  }

  /// Throws ValidationError unless bx, bz >= 1.
  void validate() const;

  friend bool operator==(const PortBudget &, const PortBudget &) = default;
};

/// Column-wise port usage of a set of strings: dx counts X and Y letters, dz
/// counts Z and Y letters.
class PortDemand {
 public:
  PortDemand() = default;
  explicit PortDemand(std::size_t num_qubits) : dx_(num_qubits, 0), dz_(num_qubits, 0) {}

  std::size_t num_qubits() const { return dx_.size(); }
  int dx(std::size_t q) const { return dx_[q]; }
  int dz(std::size_t q) const { return dz_[q]; }

  void add(const PauliString &p);
  void remove(const PauliString &p);
  void clear();

  /// Would adding p keep every column within budget?
  bool admits(const PauliString &p, const PortBudget &b) const;

  /// Sum over columns of max(0, dx - bx) + max(0, dz - bz).
  long excess(const PortBudget &b) const;

  bool within(const PortBudget &b) const { return excess(b) == 0; }

 private:
  std::vector<int> dx_, dz_;
};

PortDemand port_demand(std::span<const PauliString> group);

bool fits_budget(std::span<const PauliString> group, const PauliString &candidate, const PortBudget &b);

/// Ordered partition of a working sequence into contiguous groups. Indices
/// refer to positions in that sequence.
struct Grouping {
  std::vector<std::vector<std::size_t>> groups;

  std::size_t depth() const { return groups.size(); }
  friend bool operator==(const Grouping &, const Grouping &) = default;
};

/// Left-to-right greedy on commutation only. Minimal group count for the
/// given order.
Grouping greedy_cliques(std::span<const PauliString> seq);

/// Left-to-right greedy that closes a group on anticommutation or when the
/// candidate would push any column past the budget.
Grouping hw_greedy(std::span<const PauliString> seq, const PortBudget &b);

/// greedy_cliques, then each clique is split in order wherever the budget
/// would be exceeded. Cliques are never re-opened across their boundaries.
Grouping baseline_grouping(std::span<const PauliString> seq, const PortBudget &b);
Grouping baseline_grouping(const PpmCircuit &c, const PortBudget &b);

struct Metrics {
  std::size_t depth = 0;
  std::size_t total_weight_program = 0;
  std::size_t total_weight_all = 0;

  friend bool operator==(const Metrics &, const Metrics &) = default;
};

Metrics metrics(std::span<const PauliString> seq, std::size_t num_program, const Grouping &g);
Metrics metrics(const PpmCircuit &c, const Grouping &g);

/// True when g covers seq exactly once, in order, with every group mutually
/// commuting and within budget.
bool is_feasible(std::span<const PauliString> seq, const Grouping &g, const PortBudget &b);

}  // namespace ppmsched
