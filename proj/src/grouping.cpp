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

#include "ppmsched/grouping.hpp"

#include <algorithm>
#include <string>

#include "ppmsched/errors.hpp"

namespace ppmsched {

void PortBudget::validate() const {
  if (bx < 1 || bz < 1) {
    throw ValidationError("port budget must be at least 1 per type (got " + std::to_string(bx) + ", " +
                          std::to_string(bz) + ")");
  }
}

void PortDemand::add(const PauliString &p) {
  if (p.num_qubits() != dx_.size()) throw DimensionError("PortDemand: qubit count mismatch");
  p.for_each_active([&](std::size_t q, Pauli letter) {
    dx_[q] += has_x(letter);
    dz_[q] += has_z(letter);
  });
}

void PortDemand::remove(const PauliString &p) {
  if (p.num_qubits() != dx_.size()) throw DimensionError("PortDemand: qubit count mismatch");
  p.for_each_active([&](std::size_t q, Pauli letter) {
    dx_[q] -= has_x(letter);
    dz_[q] -= has_z(letter);
  });
}

void PortDemand::clear() {
  std::fill(dx_.begin(), dx_.end(), 0);
  std::fill(dz_.begin(), dz_.end(), 0);
}

bool PortDemand::admits(const PauliString &p, const PortBudget &b) const {
  if (p.num_qubits() != dx_.size()) throw DimensionError("PortDemand: qubit count mismatch");
  bool ok = true;
  p.for_each_active([&](std::size_t q, Pauli letter) {
    if (has_x(letter) && dx_[q] + 1 > b.bx) ok = false;
    if (has_z(letter) && dz_[q] + 1 > b.bz) ok = false;
  });
  return ok;
}

long PortDemand::excess(const PortBudget &b) const {
  long total = 0;
  for (std::size_t q = 0; q < dx_.size(); ++q) {
    total += std::max(0, dx_[q] - b.bx) + std::max(0, dz_[q] - b.bz);
  }
  return total;
}

PortDemand port_demand(std::span<const PauliString> group) {
  PortDemand d(group.empty() ? 0 : group.front().num_qubits());
  for (const PauliString &p : group) d.add(p);
  return d;
}

bool fits_budget(std::span<const PauliString> group, const PauliString &candidate, const PortBudget &b) {
  PortDemand d(candidate.num_qubits());
  for (const PauliString &p : group) d.add(p);
  return d.admits(candidate, b);
}

namespace {

// Shared left-to-right sweep. A group closes when the candidate anticommutes
// with a member or, when ports are enforced, overflows the budget.
template <bool kEnforcePorts>
Grouping sweep(std::span<const PauliString> seq, std::size_t offset, const PortBudget &b) {
  Grouping out;
  if (seq.empty()) return out;
  PortDemand demand(kEnforcePorts ? seq.front().num_qubits() : 0);
  std::vector<std::size_t> current;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    bool fits = std::all_of(current.begin(), current.end(),
                            [&](std::size_t j) { return commutes(seq[j - offset], seq[i]); });
    if constexpr (kEnforcePorts) fits = fits && demand.admits(seq[i], b);
    if (!fits) {
      out.groups.push_back(std::move(current));
      current.clear();
      if constexpr (kEnforcePorts) demand.clear();
    }
    current.push_back(i + offset);
    if constexpr (kEnforcePorts) demand.add(seq[i]);
  }
  out.groups.push_back(std::move(current));
  return out;
}

}  // namespace

Grouping greedy_cliques(std::span<const PauliString> seq) { return sweep<false>(seq, 0, PortBudget::unlimited()); }

Grouping hw_greedy(std::span<const PauliString> seq, const PortBudget &b) {
  b.validate();
  return sweep<true>(seq, 0, b);
}

Grouping baseline_grouping(std::span<const PauliString> seq, const PortBudget &b) {
  b.validate();
  Grouping out;
  for (const auto &clique : greedy_cliques(seq).groups) {
    const std::size_t first = clique.front();
    // Members of a clique commute, so the port-only split is hw_greedy on the slice.
    Grouping parts = sweep<true>(seq.subspan(first, clique.size()), first, b);
    for (auto &g : parts.groups) out.groups.push_back(std::move(g));
  }
  return out;
}

Grouping baseline_grouping(const PpmCircuit &c, const PortBudget &b) {
  const auto seq = c.sequence();
  return baseline_grouping(seq, b);
}

Metrics metrics(std::span<const PauliString> seq, std::size_t num_program, const Grouping &g) {
  Metrics m;
  m.depth = g.depth();
  for (const auto &group : g.groups) {
    for (std::size_t i : group) {
      if (i >= seq.size()) throw std::out_of_range("grouping index " + std::to_string(i) + " out of range");
      m.total_weight_program += program_weight(seq[i], num_program);
      m.total_weight_all += weight(seq[i]);
    }
  }
  return m;
}

Metrics metrics(const PpmCircuit &c, const Grouping &g) {
  const auto seq = c.sequence();
  return metrics(seq, c.num_program, g);
}

bool is_feasible(std::span<const PauliString> seq, const Grouping &g, const PortBudget &b) {
  if (seq.empty()) return g.groups.empty();
  std::size_t next = 0;
  for (const auto &group : g.groups) {
    if (group.empty()) return false;
    PortDemand d(seq[0].num_qubits());
    for (std::size_t k = 0; k < group.size(); ++k) {
      if (group[k] != next++ || group[k] >= seq.size()) return false;
      for (std::size_t l = 0; l < k; ++l) {
        if (!commutes(seq[group[k]], seq[group[l]])) return false;
      }
      d.add(seq[group[k]]);
    }
    if (!d.within(b)) return false;
  }
  return next == seq.size();
}

}  // namespace ppmsched
