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

// Dense-matrix reference semantics for small instances. Everything here is
// O(4^n) and only meant for verification.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <type_traits>
#include <variant>

#include "ppmsched/circuit.hpp"
#include "ppmsched/compile.hpp"
#include "ppmsched/errors.hpp"
#include "ppmsched/pauli.hpp"

namespace ppmsched::sim {

template <typename Real = double>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real = double>
using CMatrix2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

template <typename Real = double>
using CMatrix4 = Eigen::Matrix<std::complex<Real>, 4, 4>;

inline constexpr std::size_t kMaxQubits = 10;

inline void check_size(std::size_t n) {
  if (n > kMaxQubits) {
    throw SizeLimitError("dense simulation limited to " + std::to_string(kMaxQubits) + " qubits, got " +
                         std::to_string(n));
  }
}

template <typename Real = double>
CMatrix2<Real> letter_matrix(Pauli p) {
  using C = std::complex<Real>;
  CMatrix2<Real> m;
  switch (p) {
    case Pauli::I:
      m << C(1), C(0), C(0), C(1);
      break;
    case Pauli::X:
      m << C(0), C(1), C(1), C(0);
      break;
    case Pauli::Y:
      m << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case Pauli::Z:
      m << C(1), C(0), C(0), C(-1);
      break;
  }
  return m;
}

/// i^phase_exp * (P_0 kron P_1 kron ... kron P_{n-1}); qubit 0 is the most
/// significant bit of the basis index.
template <typename Real = double>
CMatrix<Real> pauli_matrix(const PauliString &p) {
  check_size(p.num_qubits());
  CMatrix<Real> m = CMatrix<Real>::Identity(1, 1);
  for (std::size_t q = 0; q < p.num_qubits(); ++q) {
    CMatrix<Real> next = Eigen::kroneckerProduct(m, letter_matrix<Real>(p[q])).eval();
    m = std::move(next);
  }
  static const std::complex<Real> kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  return kPhase[p.phase_exp()] * m;
}

/// exp(-i theta P) = cos(theta) I - i sin(theta) P, valid because P^2 = I.
template <typename Real = double>
CMatrix<Real> ppr_unitary(const Ppr &r) {
  const CMatrix<Real> m = pauli_matrix<Real>(r.pauli);
  const Real theta = static_cast<Real>(r.angle.theta());
  return std::complex<Real>(std::cos(theta), 0) * CMatrix<Real>::Identity(m.rows(), m.cols()) -
         std::complex<Real>(0, std::sin(theta)) * m;
}

template <typename Real = double>
CMatrix2<Real> single_gate_matrix(CliffordKind k) {
  using C = std::complex<Real>;
  const Real h = Real(1) / std::sqrt(Real(2));
  CMatrix2<Real> m;
  switch (k) {
    case CliffordKind::H:
      m << C(h), C(h), C(h), C(-h);
      break;
    case CliffordKind::S:
      m << C(1), C(0), C(0), C(0, 1);
      break;
    case CliffordKind::Sdg:
      m << C(1), C(0), C(0), C(0, -1);
      break;
    case CliffordKind::X:
      return letter_matrix<Real>(Pauli::X);
    case CliffordKind::Y:
      return letter_matrix<Real>(Pauli::Y);
    case CliffordKind::Z:
      return letter_matrix<Real>(Pauli::Z);
    default:
      throw std::invalid_argument("single_gate_matrix: two-qubit gate");
  }
  return m;
}

/// Basis order |ab> with a = first target as the high bit.
template <typename Real = double>
CMatrix4<Real> two_gate_matrix(CliffordKind k) {
  CMatrix4<Real> m = CMatrix4<Real>::Zero();
  switch (k) {
    case CliffordKind::CX:
      m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
      break;
    case CliffordKind::CZ:
      m(0, 0) = m(1, 1) = m(2, 2) = 1;
      m(3, 3) = -1;
      break;
    case CliffordKind::SWAP:
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
      break;
    default:
      throw std::invalid_argument("two_gate_matrix: single-qubit gate");
  }
  return m;
}

/// Standard gate matrix of a Z rotation op: T = diag(1, e^{i pi/4}),
/// Tdg its adjoint, rz(lambda) = diag(e^{-i lambda/2}, e^{i lambda/2}).
template <typename Real = double>
CMatrix2<Real> rotation_gate_matrix(const RotationAngle &a) {
  using C = std::complex<Real>;
  CMatrix2<Real> m = CMatrix2<Real>::Zero();
  const Real quarter = static_cast<Real>(std::numbers::pi / 4);
  switch (a.tag()) {
    case RotationAngle::Tag::T:
      m(0, 0) = 1;
      m(1, 1) = std::polar(Real(1), quarter);
      break;
    case RotationAngle::Tag::Tdg:
      m(0, 0) = 1;
      m(1, 1) = std::polar(Real(1), -quarter);
      break;
    case RotationAngle::Tag::Rz: {
      const Real theta = static_cast<Real>(a.theta());
      m(0, 0) = std::polar(Real(1), -theta);
      m(1, 1) = std::polar(Real(1), theta);
      break;
    }
  }
  return m;
}

/// u <- G u, with G the 2x2 matrix g acting on qubit q of an n-qubit register.
template <typename Derived, typename Real>
void apply_local(Eigen::MatrixBase<Derived> &u, const CMatrix2<Real> &g, std::size_t q, std::size_t n) {
  const Eigen::Index bit = Eigen::Index{1} << (n - 1 - q);
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    if (r & bit) continue;
    const auto r0 = u.row(r).eval();
    const auto r1 = u.row(r | bit).eval();
    u.row(r) = g(0, 0) * r0 + g(0, 1) * r1;
    u.row(r | bit) = g(1, 0) * r0 + g(1, 1) * r1;
  }
}

template <typename Derived, typename Real>
void apply_local(Eigen::MatrixBase<Derived> &u, const CMatrix4<Real> &g, std::size_t a, std::size_t b, std::size_t n) {
  const Eigen::Index ba = Eigen::Index{1} << (n - 1 - a);
  const Eigen::Index bb = Eigen::Index{1} << (n - 1 - b);
  for (Eigen::Index r = 0; r < u.rows(); ++r) {
    if ((r & ba) || (r & bb)) continue;
    const Eigen::Index idx[4] = {r, r | bb, r | ba, r | ba | bb};
    Eigen::Matrix<std::complex<Real>, 4, Eigen::Dynamic> rows(4, u.cols());
    for (int k = 0; k < 4; ++k) rows.row(k) = u.row(idx[k]);
    const auto out = (g * rows).eval();
    for (int k = 0; k < 4; ++k) u.row(idx[k]) = out.row(k);
  }
}

/// Product of the gate matrices in time order (later gates multiply on the
/// left). Measurements are refused.
template <typename Real = double>
CMatrix<Real> circuit_unitary(const GateCircuit &c) {
  check_size(c.num_qubits);
  c.validate();
  const std::size_t n = c.num_qubits;
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMatrix<Real> u = CMatrix<Real>::Identity(dim, dim);
  for (const GateOp &op : c.ops) {
    if (std::holds_alternative<Measure>(op)) throw UnsupportedError("circuit_unitary: circuit contains a measurement");
    if (const auto *g = std::get_if<CliffordGate>(&op)) {
      if (is_two_qubit(g->kind)) {
        apply_local(u, two_gate_matrix<Real>(g->kind), g->targets[0], g->targets[1], n);
      } else {
        apply_local(u, single_gate_matrix<Real>(g->kind), g->targets[0], n);
      }
    } else {
      const auto &rot = std::get<ZRotation>(op);
      apply_local(u, rotation_gate_matrix<Real>(rot.angle), rot.qubit, n);
    }
  }
  return u;
}

/// True iff some unit-modulus lambda gives max |a - lambda b| <= tol. lambda
/// is fixed from the largest-magnitude entry of b.
template <typename DerivedA, typename DerivedB>
bool equal_up_to_phase(const Eigen::MatrixBase<DerivedA> &a, const Eigen::MatrixBase<DerivedB> &b,
                       typename DerivedA::RealScalar tol) {
  using Real = typename DerivedA::RealScalar;
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("equal_up_to_phase: shape mismatch");
  if (a.size() == 0) return true;
  Eigen::Index r = 0, c = 0;
  const Real peak = b.cwiseAbs().maxCoeff(&r, &c);
  if (peak == Real(0)) return a.cwiseAbs().maxCoeff() <= tol;
  const std::complex<Real> ratio = a(r, c) / b(r, c);
  if (std::abs(ratio) == Real(0)) return false;
  const std::complex<Real> lambda = ratio / std::abs(ratio);
  return (a - lambda * b).cwiseAbs().maxCoeff() <= tol;
}

/// Checks a compilation against dense matrices:
///  - circuit unitary == C * R_k ... R_1 up to global phase,
///  - tableau images equal C X_j C^dagger and C Z_j C^dagger,
///  - terminal[j] equals C^dagger Z_q C for the j-th measured qubit q.
/// C is the product of the circuit's Clifford gates.
struct CompilationCheck {
  bool unitary_ok = false;
  bool tableau_ok = false;
  bool terminal_ok = false;
  double max_deviation = 0.0;

  bool ok() const { return unitary_ok && tableau_ok && terminal_ok; }
};

template <typename Real = double>
CompilationCheck check_compilation(const GateCircuit &circuit, const CompiledCircuit &compiled, Real tol) {
  check_size(circuit.num_qubits);
  const std::size_t n = circuit.num_qubits;
  GateCircuit unitary_part{n, {}};
  GateCircuit clifford_part{n, {}};
  std::vector<std::size_t> measured;
  for (const GateOp &op : circuit.ops) {
    if (const auto *m = std::get_if<Measure>(&op)) {
      measured.push_back(m->qubit);
      continue;
    }
    unitary_part.ops.push_back(op);
    if (std::holds_alternative<CliffordGate>(op)) clifford_part.ops.push_back(op);
  }
  const CMatrix<Real> u = circuit_unitary<Real>(unitary_part);
  const CMatrix<Real> cliff = circuit_unitary<Real>(clifford_part);

  CompilationCheck out;
  CMatrix<Real> rebuilt = cliff;
  for (auto it = compiled.pprs.rbegin(); it != compiled.pprs.rend(); ++it) rebuilt = (rebuilt * ppr_unitary<Real>(*it)).eval();
  out.unitary_ok = equal_up_to_phase(u, rebuilt, tol);
  {
    Eigen::Index r = 0, c = 0;
    rebuilt.cwiseAbs().maxCoeff(&r, &c);
    const std::complex<Real> lambda = u(r, c) / rebuilt(r, c);
    out.max_deviation = static_cast<double>((u - (lambda / std::abs(lambda)) * rebuilt).cwiseAbs().maxCoeff());
  }

  const auto deviation = [](const CMatrix<Real> &x, const CMatrix<Real> &y) {
    return static_cast<double>((x - y).cwiseAbs().maxCoeff());
  };
  out.tableau_ok = true;
  for (std::size_t q = 0; q < n; ++q) {
    for (Pauli letter : {Pauli::X, Pauli::Z}) {
      const PauliString gen = PauliString::single(n, q, letter);
      const PauliString &img = letter == Pauli::X ? compiled.final_clifford.x_image(q) : compiled.final_clifford.z_image(q);
      const double dev = deviation(pauli_matrix<Real>(img), cliff * pauli_matrix<Real>(gen) * cliff.adjoint());
      out.max_deviation = std::max(out.max_deviation, dev);
      if (dev > static_cast<double>(tol)) out.tableau_ok = false;
    }
  }

  out.terminal_ok = measured.size() == compiled.terminal.size();
  for (std::size_t j = 0; out.terminal_ok && j < measured.size(); ++j) {
    const PauliString z = PauliString::single(n, measured[j], Pauli::Z);
    const double dev =
        deviation(pauli_matrix<Real>(compiled.terminal[j]), cliff.adjoint() * pauli_matrix<Real>(z) * cliff);
    out.max_deviation = std::max(out.max_deviation, dev);
    if (dev > static_cast<double>(tol)) out.terminal_ok = false;
  }
  return out;
}

}  // namespace ppmsched::sim
