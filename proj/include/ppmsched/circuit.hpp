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
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ppmsched/clifford.hpp"
#include "ppmsched/pauli.hpp"

namespace ppmsched {

/// Rotation angle theta of exp(-i theta P). T and Tdg are the +-pi/8 cases;
/// rz(lambda) is stored as theta = lambda / 2.
class RotationAngle {
 public:
  enum class Tag { T, Tdg, Rz };

  static RotationAngle t() { return RotationAngle(Tag::T, 0.0); }
  static RotationAngle tdg() { return RotationAngle(Tag::Tdg, 0.0); }
  static RotationAngle rz(double theta);

  Tag tag() const { return tag_; }
  double theta() const;
  RotationAngle negated() const;

  friend bool operator==(const RotationAngle &, const RotationAngle &) = default;

 private:
  RotationAngle(Tag tag, double theta) : tag_(tag), rz_theta_(theta) {}

  Tag tag_;
  double rz_theta_;
};

/// exp(-i theta Z_q) on a single program qubit.
struct ZRotation {
  std::size_t qubit;
  RotationAngle angle;
  friend bool operator==(const ZRotation &, const ZRotation &) = default;
};

struct Measure {
  std::size_t qubit;
  friend bool operator==(const Measure &, const Measure &) = default;
};

using GateOp = std::variant<CliffordGate, ZRotation, Measure>;

struct GateCircuit {
  std::size_t num_qubits = 0;
  std::vector<GateOp> ops;

  /// Throws ValidationError if an op references a qubit outside the register.
  void validate() const;
};

/// Pauli product rotation exp(-i theta P) over the program qubits.
struct Ppr {
  PauliString pauli;
  RotationAngle angle;
};

/// Pauli product measurement over program (+) resource columns.
struct Ppm {
  PauliString pauli;
  std::optional<std::size_t> resource;

  friend bool operator==(const Ppm &, const Ppm &) = default;
};

struct PpmCircuit {
  std::size_t num_program = 0;
  std::size_t num_resource = 0;
  std::vector<Ppm> ppms;

  std::size_t width() const { return num_program + num_resource; }
  std::vector<PauliString> sequence() const;

  /// Checks widths, the one-Z-per-tail rule, and that resource indices are a
  /// permutation of [0, num_resource). Throws ValidationError.
  void validate() const;

  friend bool operator==(const PpmCircuit &, const PpmCircuit &) = default;
};

/// OpenQASM 2 subset: one qreg, optional creg, gates
/// h s sdg x y z cx cz swap t tdg rz(expr) and measure.
GateCircuit parse_qasm(std::string_view text);
GateCircuit parse_qasm_file(const std::string &path);

/// Native line format:
///   qubits N
///   resources R
///   PPM [+|-]<N letters>[ r<k>]
/// Lines starting with '#' are comments.
PpmCircuit parse_ppm_text(std::string_view text);
PpmCircuit parse_ppm_file(const std::string &path);
std::string emit_ppm_text(const PpmCircuit &circuit);

std::string read_file(const std::string &path);

}  // namespace ppmsched
