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

#include "ppmsched/compile.hpp"

#include "ppmsched/errors.hpp"

namespace ppmsched {

CompiledCircuit compile_to_pprs(const GateCircuit &circuit) {
  if (circuit.num_qubits == 0) throw ValidationError("circuit declares no qubits");
  circuit.validate();

  CompiledCircuit out{{}, CliffordTableau(circuit.num_qubits), {}};
  bool measuring = false;
  for (const GateOp &op : circuit.ops) {
    if (const auto *m = std::get_if<Measure>(&op)) {
      measuring = true;
      out.terminal.push_back(out.final_clifford.conjugate(PauliString::single(circuit.num_qubits, m->qubit, Pauli::Z)));
      continue;
    }
    if (measuring) throw UnsupportedError("mid-circuit measurement: gates follow a measurement");
    if (const auto *g = std::get_if<CliffordGate>(&op)) {
      out.final_clifford.append(*g);
    } else {
      const auto &rot = std::get<ZRotation>(op);
      PauliString p = out.final_clifford.conjugate(PauliString::single(circuit.num_qubits, rot.qubit, Pauli::Z));
      RotationAngle angle = rot.angle;
      if (p.is_negative()) {
        p.negate();
        angle = angle.negated();
      }
      out.pprs.push_back(Ppr{std::move(p), angle});
    }
  }
  return out;
}

PpmCircuit attach_resource_states(std::span<const Ppr> pprs, std::span<const PauliString> terminal) {
  PpmCircuit out;
  out.num_program = !pprs.empty() ? pprs.front().pauli.num_qubits()
                                  : (!terminal.empty() ? terminal.front().num_qubits() : 0);
  out.num_resource = pprs.size();
  out.ppms.reserve(pprs.size() + terminal.size());
  for (std::size_t i = 0; i < pprs.size(); ++i) {
    if (pprs[i].pauli.num_qubits() != out.num_program) throw DimensionError("attach_resource_states: width mismatch");
    PauliString p = pprs[i].pauli.extended(out.width());
    p.set(out.num_program + i, Pauli::Z);
    out.ppms.push_back(Ppm{std::move(p), i});
  }
  for (const PauliString &t : terminal) {
    if (t.num_qubits() != out.num_program) throw DimensionError("attach_resource_states: width mismatch");
    out.ppms.push_back(Ppm{t.extended(out.width()), std::nullopt});
  }
  return out;
}

PpmCircuit attach_resource_states(const CompiledCircuit &compiled) {
  PpmCircuit out = attach_resource_states(compiled.pprs, compiled.terminal);
  out.num_program = compiled.final_clifford.num_qubits();
  return out;
}

}  // namespace ppmsched
