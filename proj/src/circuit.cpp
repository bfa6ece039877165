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

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ppmsched/circuit.hpp"
#include "ppmsched/errors.hpp"

namespace ppmsched {

RotationAngle RotationAngle::rz(double theta) {
  if (!std::isfinite(theta)) throw ValidationError("rotation angle must be finite");
  return RotationAngle(Tag::Rz, theta);
}

double RotationAngle::theta() const {
  switch (tag_) {
    case Tag::T:
      return std::numbers::pi / 8;
    case Tag::Tdg:
      return -std::numbers::pi / 8;
    case Tag::Rz:
      return rz_theta_;
  }
  return 0.0;
}

RotationAngle RotationAngle::negated() const {
  switch (tag_) {
    case Tag::T:
      return tdg();
    case Tag::Tdg:
      return t();
    case Tag::Rz:
      return RotationAngle(Tag::Rz, -rz_theta_);
  }
  return *this;
}

void GateCircuit::validate() const {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    const std::size_t top = std::visit(
        [](const auto &op) -> std::size_t {
          using T = std::decay_t<decltype(op)>;
          if constexpr (std::is_same_v<T, CliffordGate>) {
            return op.max_target();
          } else {
            return op.qubit;
          }
        },
        ops[i]);
    if (top >= num_qubits) {
      throw ValidationError("op " + std::to_string(i) + " references qubit " + std::to_string(top) + " but only " +
                            std::to_string(num_qubits) + " are declared");
    }
  }
}

std::vector<PauliString> PpmCircuit::sequence() const {
  std::vector<PauliString> out;
  out.reserve(ppms.size());
  for (const Ppm &m : ppms) out.push_back(m.pauli);
  return out;
}

void PpmCircuit::validate() const {
  std::vector<bool> used(num_resource, false);
  for (std::size_t i = 0; i < ppms.size(); ++i) {
    const Ppm &m = ppms[i];
    const std::string where = "ppm " + std::to_string(i) + ": ";
    if (m.pauli.num_qubits() != width()) throw ValidationError(where + "width mismatch");
    for (std::size_t r = 0; r < num_resource; ++r) {
      const Pauli letter = m.pauli[num_program + r];
      const bool own = m.resource && *m.resource == r;
      if (own ? letter != Pauli::Z : letter != Pauli::I) {
        throw ValidationError(where + "unexpected letter on resource column r" + std::to_string(r));
      }
    }
    if (m.resource) {
      if (*m.resource >= num_resource) throw ValidationError(where + "resource index out of range");
      if (used[*m.resource]) throw ValidationError(where + "resource index reused");
      used[*m.resource] = true;
    }
  }
  for (std::size_t r = 0; r < num_resource; ++r) {
    if (!used[r]) throw ValidationError("resource r" + std::to_string(r) + " is never consumed");
  }
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GateCircuit parse_qasm_file(const std::string &path) { return parse_qasm(read_file(path)); }

PpmCircuit parse_ppm_file(const std::string &path) { return parse_ppm_text(read_file(path)); }

}  // namespace ppmsched
