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

#include "ppmsched/pauli.hpp"

#include <algorithm>
#include <stdexcept>

#include "ppmsched/errors.hpp"

namespace ppmsched {

namespace {

std::size_t words_for(std::size_t n) { return (n + PauliString::kWordBits - 1) / PauliString::kWordBits; }

void require_same_size(const PauliString &p, const PauliString &q, const char *op) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionError(std::string(op) + ": qubit count mismatch (" + std::to_string(p.num_qubits()) +
                         " vs " + std::to_string(q.num_qubits()) + ")");
  }
}

const char *phase_prefix(unsigned k) {
  switch (k & 3u) {
    case 0:
      return "";
    case 1:
      return "+i";
    case 2:
      return "-";
    default:
      return "-i";
  }
}

}  // namespace

char to_char(Pauli p) { return "IXZY"[static_cast<std::uint8_t>(p)]; }

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
    case '_':
      return Pauli::I;
    case 'X':
      return Pauli::X;
    case 'Y':
      return Pauli::Y;
    case 'Z':
      return Pauli::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
  }
}

PauliString::PauliString(std::size_t num_qubits)
    : num_qubits_(num_qubits), xs_(words_for(num_qubits), 0), zs_(words_for(num_qubits), 0) {}

PauliString PauliString::single(std::size_t num_qubits, std::size_t q, Pauli p) {
  PauliString out(num_qubits);
  out.set(q, p);
  return out;
}

void PauliString::set(std::size_t q, Pauli p) {
  if (q >= num_qubits_) {
    throw std::out_of_range("qubit " + std::to_string(q) + " out of range for " + std::to_string(num_qubits_) +
                            "-qubit Pauli string");
  }
  const Word mask = Word{1} << (q % kWordBits);
  Word &x = xs_[q / kWordBits];
  Word &z = zs_[q / kWordBits];
  x = has_x(p) ? (x | mask) : (x & ~mask);
  z = has_z(p) ? (z | mask) : (z & ~mask);
}

bool PauliString::is_identity_letters() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if ((xs_[w] | zs_[w]) != 0) return false;
  }
  return true;
}

PauliString &PauliString::operator*=(const PauliString &rhs) {
  require_same_size(*this, rhs, "multiply");
  int plus = 0;
  int minus = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    const Word x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
    const Word px1 = x1 & ~z1, py1 = x1 & z1, pz1 = ~x1 & z1;
    const Word px2 = x2 & ~z2, py2 = x2 & z2, pz2 = ~x2 & z2;
    // XY = iZ, YZ = iX, ZX = iY; the reversed orders carry -i.
    plus += std::popcount((px1 & py2) | (py1 & pz2) | (pz1 & px2));
    minus += std::popcount((py1 & px2) | (pz1 & py2) | (px1 & pz2));
    xs_[w] = x1 ^ x2;
    zs_[w] = z1 ^ z2;
  }
  const int k = static_cast<int>(phase_exp_) + static_cast<int>(rhs.phase_exp_) + plus - minus;
  set_phase_exp(static_cast<unsigned>(((k % 4) + 4) % 4));
  return *this;
}

PauliString PauliString::extended(std::size_t num_qubits) const {
  if (num_qubits < num_qubits_) {
    throw DimensionError("extended: cannot shrink a Pauli string");
  }
  PauliString out = *this;
  out.num_qubits_ = num_qubits;
  out.xs_.resize(words_for(num_qubits), 0);
  out.zs_.resize(words_for(num_qubits), 0);
  return out;
}

bool commutes(const PauliString &p, const PauliString &q) {
  require_same_size(p, q, "commutes");
  const auto px = p.x_words(), pz = p.z_words(), qx = q.x_words(), qz = q.z_words();
  PauliString::Word acc = 0;
  for (std::size_t w = 0; w < px.size(); ++w) {
    acc ^= (px[w] & qz[w]) ^ (pz[w] & qx[w]);
  }
  return (std::popcount(acc) & 1) == 0;
}

PauliString multiply(const PauliString &p, const PauliString &q) {
  PauliString out = p;
  out *= q;
  return out;
}

std::size_t weight(const PauliString &p) {
  std::size_t total = 0;
  const auto xs = p.x_words(), zs = p.z_words();
  for (std::size_t w = 0; w < xs.size(); ++w) {
    total += static_cast<std::size_t>(std::popcount(xs[w] | zs[w]));
  }
  return total;
}

std::size_t program_weight(const PauliString &p, std::size_t num_program) {
  num_program = std::min(num_program, p.num_qubits());
  std::size_t total = 0;
  const auto xs = p.x_words(), zs = p.z_words();
  const std::size_t full = num_program / PauliString::kWordBits;
  for (std::size_t w = 0; w < full; ++w) {
    total += static_cast<std::size_t>(std::popcount(xs[w] | zs[w]));
  }
  const std::size_t rem = num_program % PauliString::kWordBits;
  if (rem != 0) {
    const PauliString::Word mask = (PauliString::Word{1} << rem) - 1;
    total += static_cast<std::size_t>(std::popcount((xs[full] | zs[full]) & mask));
  }
  return total;
}

std::string to_string(const PauliString &p) {
  std::string out = phase_prefix(p.phase_exp());
  out.reserve(out.size() + p.num_qubits());
  for (std::size_t q = 0; q < p.num_qubits(); ++q) out.push_back(to_char(p[q]));
  return out;
}

std::string to_string(const PauliString &p, std::size_t num_program) {
  if (num_program > p.num_qubits()) {
    throw DimensionError("to_string: program width exceeds string length");
  }
  std::string out = phase_prefix(p.phase_exp());
  for (std::size_t q = 0; q < num_program; ++q) out.push_back(to_char(p[q]));
  for (std::size_t q = num_program; q < p.num_qubits(); ++q) {
    const Pauli letter = p[q];
    if (letter == Pauli::I) continue;
    if (letter != Pauli::Z) {
      throw ValidationError("resource column r" + std::to_string(q - num_program) + " carries " +
                            to_char(letter) + ", only Z is representable");
    }
    out += " r" + std::to_string(q - num_program);
  }
  return out;
}

PauliString parse_pauli(std::string_view text) {
  unsigned phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    phase = text.front() == '-' ? 2 : 0;
    text.remove_prefix(1);
  }
  if (!text.empty() && text.front() == 'i') {
    phase += 1;
    text.remove_prefix(1);
  }
  PauliString out(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) out.set(q, pauli_from_char(text[q]));
  out.set_phase_exp(phase);
  return out;
}

bool mutually_commuting(std::span<const PauliString> strings) {
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (!commutes(strings[i], strings[j])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SymplecticBasis

std::vector<PauliString::Word> SymplecticBasis::pack(const PauliString &p) const {
  if (p.num_qubits() != num_qubits_) {
    throw DimensionError("SymplecticBasis: qubit count mismatch");
  }
  std::vector<PauliString::Word> out(p.x_words().begin(), p.x_words().end());
  out.insert(out.end(), p.z_words().begin(), p.z_words().end());
  return out;
}

SymplecticBasis::SymplecticBasis(std::span<const PauliString> generators)
    : num_qubits_(generators.empty() ? 0 : generators.front().num_qubits()), num_generators_(generators.size()) {
  const std::size_t combo_words = words_for(num_generators_);
  for (std::size_t g = 0; g < generators.size(); ++g) {
    std::vector<PauliString::Word> bits = pack(generators[g]);
    std::vector<PauliString::Word> combo(combo_words, 0);
    combo[g / 64] |= PauliString::Word{1} << (g % 64);
    for (const Row &row : rows_) {
      if ((bits[row.pivot / 64] >> (row.pivot % 64)) & 1u) {
        for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= row.bits[w];
        for (std::size_t w = 0; w < combo.size(); ++w) combo[w] ^= row.combo[w];
      }
    }
    auto nz = std::find_if(bits.begin(), bits.end(), [](PauliString::Word w) { return w != 0; });
    if (nz == bits.end()) continue;
    const std::size_t pivot =
        static_cast<std::size_t>(nz - bits.begin()) * 64 + static_cast<std::size_t>(std::countr_zero(*nz));
    // Keep the basis fully reduced: clear the new pivot from existing rows.
    for (Row &row : rows_) {
      if ((row.bits[pivot / 64] >> (pivot % 64)) & 1u) {
        for (std::size_t w = 0; w < bits.size(); ++w) row.bits[w] ^= bits[w];
        for (std::size_t w = 0; w < combo.size(); ++w) row.combo[w] ^= combo[w];
      }
    }
    rows_.push_back(Row{std::move(bits), std::move(combo), pivot});
  }
  std::sort(rows_.begin(), rows_.end(), [](const Row &a, const Row &b) { return a.pivot < b.pivot; });
}

std::optional<std::vector<std::size_t>> SymplecticBasis::decompose(const PauliString &p) const {
  if (num_generators_ == 0) {
    if (p.is_identity_letters()) return std::vector<std::size_t>{};
    return std::nullopt;
  }
  std::vector<PauliString::Word> bits = pack(p);
  std::vector<PauliString::Word> combo(words_for(num_generators_), 0);
  for (const Row &row : rows_) {
    if ((bits[row.pivot / 64] >> (row.pivot % 64)) & 1u) {
      for (std::size_t w = 0; w < bits.size(); ++w) bits[w] ^= row.bits[w];
      for (std::size_t w = 0; w < combo.size(); ++w) combo[w] ^= row.combo[w];
    }
  }
  if (std::any_of(bits.begin(), bits.end(), [](PauliString::Word w) { return w != 0; })) {
    return std::nullopt;
  }
  std::vector<std::size_t> members;
  for (std::size_t g = 0; g < num_generators_; ++g) {
    if ((combo[g / 64] >> (g % 64)) & 1u) members.push_back(g);
  }
  return members;
}

bool span_equal(std::span<const PauliString> a, std::span<const PauliString> b) {
  const std::size_t n = !a.empty() ? a.front().num_qubits() : (!b.empty() ? b.front().num_qubits() : 0);
  for (const auto *list : {&a, &b}) {
    for (const PauliString &p : *list) {
      if (p.num_qubits() != n) throw DimensionError("span_equal: qubit count mismatch");
    }
    if (!mutually_commuting(*list)) {
      throw PreconditionError("span_equal: generator list is not mutually commuting");
    }
  }
  const SymplecticBasis basis_a(a);
  const SymplecticBasis basis_b(b);
  if (basis_a.rank() != basis_b.rank()) return false;
  for (const PauliString &target : b) {
    const auto members = basis_a.decompose(target);
    if (!members) return false;
    PauliString product(n);
    for (std::size_t g : *members) product *= a[g];
    if (product != target) return false;
  }
  return true;
}

}  // namespace ppmsched
