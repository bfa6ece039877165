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

#include <span>
#include <vector>

#include "ppmsched/circuit.hpp"
#include "ppmsched/clifford.hpp"

namespace ppmsched {

/// Result of commuting every Clifford to the end of a Clifford+T/Rz circuit:
/// the original unitary equals final_clifford * R_k * ... * R_1, where R_i is
/// pprs[i]. terminal[j] is the observable measured by the j-th trailing
/// measurement once the Clifford has been absorbed.
struct CompiledCircuit {
  std::vector<Ppr> pprs;
  CliffordTableau final_clifford;
  std::vector<PauliString> terminal;
};

CompiledCircuit compile_to_pprs(const GateCircuit &circuit);

/// Turns the i-th rotation into the measurement P_i (x) Z on fresh resource
/// column i, then appends the terminal measurements without a resource tail.
PpmCircuit attach_resource_states(std::span<const Ppr> pprs, std::span<const PauliString> terminal);
PpmCircuit attach_resource_states(const CompiledCircuit &compiled);

}  // namespace ppmsched
