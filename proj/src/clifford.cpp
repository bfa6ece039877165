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

#include "ppmsched/clifford.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ppmsched/errors.hpp"

namespace ppmsched {

namespace {

struct Image {
  Pauli letter;
  bool negate;
};

// Single-qubit action g P g^dagger on X, Z and Y, indexed by gate kind.
Image single_qubit_image(CliffordKind k, Pauli p) {
  using enum Pauli;
  switch (k) {
    case CliffordKind::H:
      return p == X ? Image{Z, false} : p == Z ? Image{X, false} : Image{Y, true};
    case CliffordKind::S:
      return p == X ? Image{Y, false} : p == Z ? Image{Z, false} : Image{X, true};
    case CliffordKind::Sdg:
      return p == X ? Image{Y, true} : p == Z ? Image{Z, false} : Image{X, false};
    case CliffordKind::X:
      return Image{p, p != X};
    case CliffordKind::Y:
      return Image{p, p != Y};
    case CliffordKind::Z:
      return Image{p, p != Z};
    default:
      throw std::logic_error("single_qubit_image: two-qubit gate");
  }
}

void apply_single(PauliString &p, CliffordKind k, std::size_t q) {
  const Pauli letter = p[q];
  if (letter == Pauli::I) return;
  const Image img = single_qubit_image(k, letter);
  p.set(q, img.letter);
  if (img.negate) p.negate();
}

void apply_cx(PauliString &p, std::size_t c, std::size_t t) {
  const bool xc = p.x(c), zc = p.z(c), xt = p.x(t), zt = p.z(t);
  if (xc && zt && (xt == zc)) p.negate();
  p.set(t, make_pauli(xt != xc, zt));
  p.set(c, make_pauli(xc, zc != zt));
}

}  // namespace

std::string_view name(CliffordKind k) {
  switch (k) {
    case CliffordKind::H:
      return "h";
    case CliffordKind::S:
      return "s";
    case CliffordKind::Sdg:
      return "sdg";
    case CliffordKind::X:
      return "x";
    case CliffordKind::Y:
      return "y";
    case CliffordKind::Z:
      return "z";
    case CliffordKind::CX:
      return "cx";
    case CliffordKind::CZ:
      return "cz";
    case CliffordKind::SWAP:
      return "swap";
  }
  return "?";
}

CliffordGate CliffordGate::one(CliffordKind kind, std::size_t q) {
  if (is_two_qubit(kind)) throw std::invalid_argument(std::string(name(kind)) + " takes two targets");
  return CliffordGate{kind, {q, q}};
}

CliffordGate CliffordGate::two(CliffordKind kind, std::size_t a, std::size_t b) {
  if (!is_two_qubit(kind)) throw std::invalid_argument(std::string(name(kind)) + " takes one target");
  if (a == b) throw std::invalid_argument(std::string(name(kind)) + " needs two distinct targets");
  return CliffordGate{kind, {a, b}};
}

CliffordGate inverse(const CliffordGate &g) {
  CliffordGate out = g;
  if (g.kind == CliffordKind::S) out.kind = CliffordKind::Sdg;
  if (g.kind == CliffordKind::Sdg) out.kind = CliffordKind::S;
  return out;
}

void conjugate_by_gate(PauliString &p, const CliffordGate &g) {
  if (g.max_target() >= p.num_qubits()) {
    throw ValidationError("gate " + std::string(name(g.kind)) + " targets qubit " +
                          std::to_string(g.max_target()) + " of a " + std::to_string(p.num_qubits()) +
                          "-qubit register");
  }
  const auto [a, b] = g.targets;
  switch (g.kind) {
    case CliffordKind::CX:
      apply_cx(p, a, b);
      break;
    case CliffordKind::CZ:
      apply_single(p, CliffordKind::H, b);
      apply_cx(p, a, b);
      apply_single(p, CliffordKind::H, b);
      break;
    case CliffordKind::SWAP: {
      const Pauli pa = p[a];
      p.set(a, p[b]);
      p.set(b, pa);
      break;
    }
    default:
      apply_single(p, g.kind, a);
  }
}

CliffordTableau::CliffordTableau(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits == 0) throw std::invalid_argument("CliffordTableau needs at least one qubit");
  for (std::size_t q = 0; q < num_qubits; ++q) {
    fwd_x_.push_back(PauliString::single(num_qubits, q, Pauli::X));
    fwd_z_.push_back(PauliString::single(num_qubits, q, Pauli::Z));
  }
  inv_x_ = fwd_x_;
  inv_z_ = fwd_z_;
}

PauliString CliffordTableau::map_through(const std::vector<PauliString> &xs, const std::vector<PauliString> &zs,
                                         const PauliString &p) {
  PauliString out(p.num_qubits());
  out.set_phase_exp(p.phase_exp());
  p.for_each_active([&](std::size_t q, Pauli letter) {
    if (has_x(letter)) out *= xs[q];
    if (has_z(letter)) out *= zs[q];
    // Y = i X Z.
    if (letter == Pauli::Y) out.add_phase_exp(1);
  });
  return out;
}

void CliffordTableau::append(const CliffordGate &g) {
  if (g.max_target() >= num_qubits_) {
    throw ValidationError("gate " + std::string(name(g.kind)) + " targets qubit " +
                          std::to_string(g.max_target()) + " of a " + std::to_string(num_qubits_) +
                          "-qubit tableau");
  }
  // (gC)^dagger P (gC) = C^dagger (g^dagger P g) C: only the generators on the
  // gate's targets change, and they are computed from the old frame.
  const CliffordGate g_inv = inverse(g);
  std::array<PauliString, 4> updated;
  for (std::size_t i = 0; i < g.arity(); ++i) {
    const std::size_t q = g.targets[i];
    PauliString x = PauliString::single(num_qubits_, q, Pauli::X);
    PauliString z = PauliString::single(num_qubits_, q, Pauli::Z);
    conjugate_by_gate(x, g_inv);
    conjugate_by_gate(z, g_inv);
    updated[2 * i] = conjugate(x);
    updated[2 * i + 1] = conjugate(z);
  }
  for (std::size_t i = 0; i < g.arity(); ++i) {
    inv_x_[g.targets[i]] = std::move(updated[2 * i]);
    inv_z_[g.targets[i]] = std::move(updated[2 * i + 1]);
  }

  for (auto &img : fwd_x_) conjugate_by_gate(img, g);
  for (auto &img : fwd_z_) conjugate_by_gate(img, g);
}

PauliString CliffordTableau::conjugate(const PauliString &p) const {
  if (p.num_qubits() != num_qubits_) throw DimensionError("conjugate: qubit count mismatch");
  return map_through(inv_x_, inv_z_, p);
}

PauliString CliffordTableau::apply(const PauliString &p) const {
  if (p.num_qubits() != num_qubits_) throw DimensionError("apply: qubit count mismatch");
  return map_through(fwd_x_, fwd_z_, p);
}

bool CliffordTableau::is_symplectic() const {
  const auto check = [&](const std::vector<PauliString> &xs, const std::vector<PauliString> &zs) {
    for (std::size_t j = 0; j < num_qubits_; ++j) {
      if (!xs[j].is_hermitian() || !zs[j].is_hermitian()) return false;
      for (std::size_t k = 0; k < num_qubits_; ++k) {
        if (commutes(xs[j], zs[k]) != (j != k)) return false;
        if (k > j && (!commutes(xs[j], xs[k]) || !commutes(zs[j], zs[k]))) return false;
      }
    }
    return true;
  };
  return check(fwd_x_, fwd_z_) && check(inv_x_, inv_z_);
}

}  // namespace ppmsched
