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

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

#include "ppmsched/pauli.hpp"

namespace ppmsched {

enum class CliffordKind { H, S, Sdg, X, Y, Z, CX, CZ, SWAP };

constexpr bool is_two_qubit(CliffordKind k) {
  return k == CliffordKind::CX || k == CliffordKind::CZ || k == CliffordKind::SWAP;
}

std::string_view name(CliffordKind k);

struct CliffordGate {
  CliffordKind kind;
  std::array<std::size_t, 2> targets{0, 0};

  static CliffordGate one(CliffordKind kind, std::size_t q);
  static CliffordGate two(CliffordKind kind, std::size_t a, std::size_t b);

  std::size_t arity() const { return is_two_qubit(kind) ? 2 : 1; }
  std::size_t max_target() const { return arity() == 2 ? std::max(targets[0], targets[1]) : targets[0]; }

  friend bool operator==(const CliffordGate &, const CliffordGate &) = default;
};

CliffordGate inverse(const CliffordGate &g);

/// p <- g p g^dagger, in place. Signs are folded into p's phase.
void conjugate_by_gate(PauliString &p, const CliffordGate &g);

/// Stabilizer tableau of an accumulated Clifford C. The public images are the
/// Heisenberg images C X_j C^dagger and C Z_j C^dagger; the inverse images are
/// kept alongside so that pulling a later Pauli back through the frame,
/// P -> C^dagger P C, costs one product per active letter.
class CliffordTableau {
 public:
  explicit CliffordTableau(std::size_t num_qubits);

  std::size_t num_qubits() const { return num_qubits_; }

  const PauliString &x_image(std::size_t q) const { return fwd_x_.at(q); }
  const PauliString &z_image(std::size_t q) const { return fwd_z_.at(q); }

  /// C <- g C.
  void append(const CliffordGate &g);

  /// C^dagger p C.
  PauliString conjugate(const PauliString &p) const;

  /// C p C^dagger.
  PauliString apply(const PauliString &p) const;

  /// Images are Hermitian, and x_image(j) anticommutes with z_image(k) iff
  /// j == k while every other pair commutes. Checked for both directions.
  bool is_symplectic() const;

  friend bool operator==(const CliffordTableau &, const CliffordTableau &) = default;

 private:
  static PauliString map_through(const std::vector<PauliString> &xs, const std::vector<PauliString> &zs,
                                 const PauliString &p);

  std::size_t num_qubits_;
  std::vector<PauliString> fwd_x_, fwd_z_;
  std::vector<PauliString> inv_x_, inv_z_;
};

inline CliffordTableau identity_tableau(std::size_t n) { return CliffordTableau(n); }

inline CliffordTableau append_gate(CliffordTableau t, const CliffordGate &g) {
  t.append(g);
  return t;
}

inline PauliString conjugate(const CliffordTableau &t, const PauliString &p) { return t.conjugate(p); }

}  // namespace ppmsched
