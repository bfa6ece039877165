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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppmsched {

/// Single-qubit Pauli letter. The low bit is the x component and the high bit
/// the z component, so Y = X | Z and demands both port types.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool has_x(Pauli p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool has_z(Pauli p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }
constexpr Pauli make_pauli(bool x, bool z) {
  return static_cast<Pauli>(static_cast<std::uint8_t>(x) | (static_cast<std::uint8_t>(z) << 1));
}

char to_char(Pauli p);
Pauli pauli_from_char(char c);

/// Pauli operator i^phase_exp * P_0 (x) ... (x) P_{n-1} stored as two packed
/// bit-vectors. Letters are the Hermitian I/X/Y/Z, so a Hermitian string has
/// phase_exp 0 (+) or 2 (-).
class PauliString {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  PauliString() = default;
  explicit PauliString(std::size_t num_qubits);

  /// Single non-identity letter at qubit q.
  static PauliString single(std::size_t num_qubits, std::size_t q, Pauli p);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_words() const { return xs_.size(); }

  Pauli operator[](std::size_t q) const {
    return make_pauli(bit(xs_, q), bit(zs_, q));
  }
  void set(std::size_t q, Pauli p);

  bool x(std::size_t q) const { return bit(xs_, q); }
  bool z(std::size_t q) const { return bit(zs_, q); }

  std::span<const Word> x_words() const { return xs_; }
  std::span<const Word> z_words() const { return zs_; }

  unsigned phase_exp() const { return phase_exp_; }
  void set_phase_exp(unsigned k) { phase_exp_ = static_cast<std::uint8_t>(k & 3u); }
  void add_phase_exp(unsigned k) { set_phase_exp(phase_exp_ + k); }

  bool is_hermitian() const { return (phase_exp_ & 1u) == 0; }
  bool is_negative() const { return phase_exp_ == 2; }
  void negate() { add_phase_exp(2); }

  /// True when every letter is I (the phase is not considered).
  bool is_identity_letters() const;

  /// In-place right multiplication: *this = *this * rhs.
  PauliString &operator*=(const PauliString &rhs);

  /// Copy with identity columns appended up to num_qubits.
  PauliString extended(std::size_t num_qubits) const;

  /// Calls f(q, letter) for every non-identity column in increasing order.
  template <typename F>
  void for_each_active(F &&f) const {
    for (std::size_t w = 0; w < xs_.size(); ++w) {
      Word active = xs_[w] | zs_[w];
      while (active != 0) {
        const std::size_t b = static_cast<std::size_t>(std::countr_zero(active));
        active &= active - 1;
        const std::size_t q = w * kWordBits + b;
        f(q, make_pauli((xs_[w] >> b) & 1u, (zs_[w] >> b) & 1u));
      }
    }
  }

  friend bool operator==(const PauliString &a, const PauliString &b) = default;

 private:
  static bool bit(const std::vector<Word> &v, std::size_t q) {
    return ((v[q / kWordBits] >> (q % kWordBits)) & 1u) != 0;
  }

  std::size_t num_qubits_ = 0;
  std::vector<Word> xs_;
  std::vector<Word> zs_;
  std::uint8_t phase_exp_ = 0;
};

/// Symplectic commutation test; phases are ignored.
bool commutes(const PauliString &p, const PauliString &q);

/// Operator product p * q with exact i^k phase tracking (XZ = -iY).
PauliString multiply(const PauliString &p, const PauliString &q);
inline PauliString operator*(const PauliString &p, const PauliString &q) { return multiply(p, q); }

/// Number of non-identity letters.
std::size_t weight(const PauliString &p);
/// Number of non-identity letters among the first num_program columns.
std::size_t program_weight(const PauliString &p, std::size_t num_program);

/// "+", "-", "+i" or "-i" prefix followed by one letter per qubit. The
/// leading "+" is omitted.
std::string to_string(const PauliString &p);

/// Sign, letters over the program columns, then one " r<k>" token per
/// resource column carrying Z. Throws ValidationError if a resource column
/// holds X or Y.
std::string to_string(const PauliString &p, std::size_t num_program);

/// Inverse of the single-argument to_string.
PauliString parse_pauli(std::string_view text);

/// Row-reduced GF(2) basis of the symplectic vectors (x|z) of a generator
/// list. Each row remembers which original generators were XORed into it, so
/// any vector in the span can be written back as a product of generators.
class SymplecticBasis {
 public:
  explicit SymplecticBasis(std::span<const PauliString> generators);

  std::size_t rank() const { return rows_.size(); }
  std::size_t num_generators() const { return num_generators_; }

  /// Indices of the generators whose product has the same letters as p, or
  /// nullopt when p is outside the span.
  std::optional<std::vector<std::size_t>> decompose(const PauliString &p) const;

 private:
  struct Row {
    std::vector<PauliString::Word> bits;   // x words followed by z words
    std::vector<PauliString::Word> combo;  // generator membership mask
    std::size_t pivot;
  };

  std::vector<PauliString::Word> pack(const PauliString &p) const;

  std::size_t num_qubits_ = 0;
  std::size_t num_generators_ = 0;
  std::vector<Row> rows_;
};

/// True when a and b generate the same signed group: equal GF(2) spans, and
/// every member of b equals, sign included, the product of its decomposition
/// over a. Both lists must be mutually commuting.
bool span_equal(std::span<const PauliString> a, std::span<const PauliString> b);

bool mutually_commuting(std::span<const PauliString> strings);

}  // namespace ppmsched
