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

#include <vector>

#include "ppmsched/circuit.hpp"
#include "ppmsched/pauli.hpp"

namespace ppmsched::testing {

/// Four commuting PPMs on four program qubits, three of them with X on
/// qubit 2, each with its own resource tail.
inline PpmCircuit hot_qubit_instance() {
  return parse_ppm_text(
      "qubits 4\nresources 4\n"
      "PPM XIXI r0\n"
      "PPM IXXI r1\n"
      "PPM IIXX r2\n"
      "PPM ZZZZ r3\n");
}

/// P1 anticommutes with P3, P2 commutes with P3, and {P1, P2} overload
/// qubit 0 at budget (1, 1).
inline std::vector<PauliString> split_witness() {
  return {parse_pauli("XI"), parse_pauli("XX"), parse_pauli("ZZ")};
}

}  // namespace ppmsched::testing
