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

#include <charconv>
#include <sstream>
#include <string>
#include <vector>

#include "ppmsched/circuit.hpp"
#include "ppmsched/errors.hpp"

namespace ppmsched {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view tok, std::size_t line, const char *what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line, std::string("bad ") + what + " '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

PpmCircuit parse_ppm_text(std::string_view text) {
  PpmCircuit circuit;
  bool have_qubits = false;
  bool have_resources = false;
  std::vector<bool> used;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    const auto toks = split_ws(line);
    if (toks.empty() || toks.front().front() == '#') continue;

    const std::string_view key = toks.front();
    if (key == "qubits" || key == "resources") {
      if (toks.size() != 2) throw ParseError(line_no, std::string(key) + " expects one value");
      if (!circuit.ppms.empty()) throw ParseError(line_no, std::string(key) + " must precede PPM lines");
      const std::size_t v = parse_count(toks[1], line_no, key == "qubits" ? "qubit count" : "resource count");
      if (key == "qubits") {
        if (have_qubits) throw ParseError(line_no, "duplicate qubits header");
        circuit.num_program = v;
        have_qubits = true;
      } else {
        if (have_resources) throw ParseError(line_no, "duplicate resources header");
        circuit.num_resource = v;
        used.assign(v, false);
        have_resources = true;
      }
      continue;
    }
    if (key != "PPM") throw ParseError(line_no, "unknown directive '" + std::string(key) + "'");
    if (!have_qubits) throw ParseError(line_no, "PPM before qubits header");
    if (toks.size() < 2 || toks.size() > 3) throw ParseError(line_no, "PPM expects a Pauli string and optional r<k>");

    std::string_view letters = toks[1];
    unsigned phase = 0;
    if (letters.front() == '+' || letters.front() == '-') {
      phase = letters.front() == '-' ? 2 : 0;
      letters.remove_prefix(1);
    }
    if (letters.size() != circuit.num_program) {
      throw ParseError(line_no, "expected " + std::to_string(circuit.num_program) + " letters, got " +
                                    std::to_string(letters.size()));
    }
    Ppm ppm{PauliString(circuit.width()), std::nullopt};
    for (std::size_t q = 0; q < letters.size(); ++q) {
      const char c = letters[q];
      if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
        throw ParseError(line_no, std::string("bad Pauli letter '") + c + "'");
      }
      ppm.pauli.set(q, pauli_from_char(c));
    }
    ppm.pauli.set_phase_exp(phase);

    if (toks.size() == 3) {
      const std::string_view tail = toks[2];
      if (tail.size() < 2 || tail.front() != 'r') throw ParseError(line_no, "bad resource token '" + std::string(tail) + "'");
      const std::size_t r = parse_count(tail.substr(1), line_no, "resource index");
      if (r >= circuit.num_resource) {
        throw ParseError(line_no, "resource index r" + std::to_string(r) + " out of range");
      }
      if (used[r]) throw ParseError(line_no, "duplicate resource index r" + std::to_string(r));
      used[r] = true;
      ppm.resource = r;
      ppm.pauli.set(circuit.num_program + r, Pauli::Z);
    }
    circuit.ppms.push_back(std::move(ppm));
  }

  for (std::size_t r = 0; r < used.size(); ++r) {
    if (!used[r]) throw ParseError(line_no, "resource r" + std::to_string(r) + " is never consumed");
  }
  return circuit;
}

std::string emit_ppm_text(const PpmCircuit &circuit) {
  circuit.validate();
  std::ostringstream out;
  out << "qubits " << circuit.num_program << '\n';
  out << "resources " << circuit.num_resource << '\n';
  for (const Ppm &m : circuit.ppms) {
    if (!m.pauli.is_hermitian()) throw ValidationError("cannot emit a non-Hermitian measurement");
    out << "PPM " << (m.pauli.is_negative() ? "-" : "");
    for (std::size_t q = 0; q < circuit.num_program; ++q) out << to_char(m.pauli[q]);
    if (m.resource) out << " r" << *m.resource;
    out << '\n';
  }
  return out.str();
}

}  // namespace ppmsched
