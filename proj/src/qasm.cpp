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

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "ppmsched/circuit.hpp"
#include "ppmsched/errors.hpp"

namespace ppmsched {

namespace {

struct Token {
  enum class Kind { Ident, Number, String, Symbol, End } kind;
  std::string text;
};

class Lexer {
 public:
  Lexer(std::string_view src, std::size_t line) : src_(src), line_(line) {}

  const Token &peek() {
    if (!ahead_) ahead_ = lex();
    return *ahead_;
  }

  Token next() {
    Token t = peek();
    ahead_.reset();
    return t;
  }

  bool accept(std::string_view symbol) {
    if (peek().kind == Token::Kind::Symbol && peek().text == symbol) {
      next();
      return true;
    }
    return false;
  }

  void expect(std::string_view symbol) {
    if (!accept(symbol)) fail("expected '" + std::string(symbol) + "' near '" + peek().text + "'");
  }

  [[noreturn]] void fail(const std::string &what) const { throw ParseError(line_, what); }

  std::size_t line() const { return line_; }

 private:
  Token lex() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ >= src_.size()) return {Token::Kind::End, ""};
    const char c = src_[pos_];
    const std::size_t start = pos_;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      return {Token::Kind::Ident, std::string(src_.substr(start, pos_ - start))};
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (pos_ < src_.size() && (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.')) ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
        ++pos_;
        if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      }
      return {Token::Kind::Number, std::string(src_.substr(start, pos_ - start))};
    }
    if (c == '"') {
      const std::size_t close = src_.find('"', pos_ + 1);
      if (close == std::string_view::npos) fail("unterminated string");
      pos_ = close + 1;
      return {Token::Kind::String, std::string(src_.substr(start + 1, close - start - 1))};
    }
    if (c == '-' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
      pos_ += 2;
      return {Token::Kind::Symbol, "->"};
    }
    ++pos_;
    return {Token::Kind::Symbol, std::string(1, c)};
  }

  std::string_view src_;
  std::size_t line_;
  std::size_t pos_ = 0;
  std::optional<Token> ahead_;
};

// expr := term (('+'|'-') term)*
// term := factor (('*'|'/') factor)*
// factor := ('-'|'+') factor | number | 'pi' | '(' expr ')'
double parse_expr(Lexer &lx);

double parse_factor(Lexer &lx) {
  if (lx.accept("-")) return -parse_factor(lx);
  if (lx.accept("+")) return parse_factor(lx);
  if (lx.accept("(")) {
    const double v = parse_expr(lx);
    lx.expect(")");
    return v;
  }
  const Token t = lx.next();
  if (t.kind == Token::Kind::Ident && t.text == "pi") return std::numbers::pi;
  if (t.kind == Token::Kind::Number) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) lx.fail("bad number '" + t.text + "'");
    return v;
  }
  lx.fail("bad expression near '" + t.text + "'");
}

double parse_term(Lexer &lx) {
  double v = parse_factor(lx);
  for (;;) {
    if (lx.accept("*")) {
      v *= parse_factor(lx);
    } else if (lx.accept("/")) {
      v /= parse_factor(lx);
    } else {
      return v;
    }
  }
}

double parse_expr(Lexer &lx) {
  double v = parse_term(lx);
  for (;;) {
    if (lx.accept("+")) {
      v += parse_term(lx);
    } else if (lx.accept("-")) {
      v -= parse_term(lx);
    } else {
      return v;
    }
  }
}

std::size_t parse_index(Lexer &lx) {
  const Token t = lx.next();
  if (t.kind != Token::Kind::Number) lx.fail("expected integer index, got '" + t.text + "'");
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) lx.fail("bad index '" + t.text + "'");
  return v;
}

struct Register {
  std::string name;
  std::size_t size = 0;
};

Register parse_declaration(Lexer &lx) {
  const Token name = lx.next();
  if (name.kind != Token::Kind::Ident) lx.fail("expected register name");
  lx.expect("[");
  const std::size_t size = parse_index(lx);
  lx.expect("]");
  return {name.text, size};
}

std::size_t parse_operand(Lexer &lx, const Register &reg) {
  const Token name = lx.next();
  if (name.kind != Token::Kind::Ident) lx.fail("expected qubit operand");
  if (name.text != reg.name) lx.fail("unknown register '" + name.text + "'");
  if (!lx.accept("[")) lx.fail("register broadcast is not supported; index the qubit explicitly");
  const std::size_t idx = parse_index(lx);
  lx.expect("]");
  if (idx >= reg.size) {
    throw ValidationError("line " + std::to_string(lx.line()) + ": qubit index " + std::to_string(idx) +
                          " out of range for " + reg.name + "[" + std::to_string(reg.size) + "]");
  }
  return idx;
}

const std::map<std::string, CliffordKind, std::less<>> &clifford_gates() {
  static const std::map<std::string, CliffordKind, std::less<>> table = {
      {"h", CliffordKind::H},   {"s", CliffordKind::S},   {"sdg", CliffordKind::Sdg},
      {"x", CliffordKind::X},   {"y", CliffordKind::Y},   {"z", CliffordKind::Z},
      {"cx", CliffordKind::CX}, {"CX", CliffordKind::CX}, {"cz", CliffordKind::CZ},
      {"swap", CliffordKind::SWAP}};
  return table;
}

struct ParserState {
  GateCircuit circuit;
  std::optional<Register> qreg;
  std::optional<Register> creg;
};

void parse_statement(Lexer &lx, ParserState &st) {
  const Token head = lx.next();
  if (head.kind == Token::Kind::End) return;
  if (head.kind != Token::Kind::Ident) lx.fail("unexpected '" + head.text + "'");
  const std::string &word = head.text;
  const auto unsupported = [&](const std::string &what) {
    throw UnsupportedError("line " + std::to_string(lx.line()) + ": " + what);
  };

  if (word == "OPENQASM") {
    const Token ver = lx.next();
    if (ver.kind != Token::Kind::Number || ver.text.rfind("2", 0) != 0) unsupported("only OPENQASM 2 is supported");
  } else if (word == "include") {
    if (lx.next().kind != Token::Kind::String) lx.fail("include expects a quoted file name");
  } else if (word == "qreg") {
    if (st.qreg) unsupported("only one qreg is supported");
    st.qreg = parse_declaration(lx);
    st.circuit.num_qubits = st.qreg->size;
  } else if (word == "creg") {
    if (st.creg) unsupported("only one creg is supported");
    st.creg = parse_declaration(lx);
  } else if (word == "measure") {
    if (!st.qreg) lx.fail("measure before qreg declaration");
    const std::size_t q = parse_operand(lx, *st.qreg);
    if (lx.accept("->")) {
      if (!st.creg) lx.fail("measure target without creg declaration");
      const Token c = lx.next();
      if (c.kind != Token::Kind::Ident || c.text != st.creg->name) lx.fail("unknown classical register");
      lx.expect("[");
      const std::size_t idx = parse_index(lx);
      lx.expect("]");
      if (idx >= st.creg->size) {
        throw ValidationError("line " + std::to_string(lx.line()) + ": classical index out of range");
      }
    }
    st.circuit.ops.emplace_back(Measure{q});
  } else if (word == "barrier" || word == "gate" || word == "opaque" || word == "if" || word == "reset") {
    unsupported("'" + word + "' statements are not supported");
  } else if (word == "t" || word == "tdg" || word == "rz") {
    if (!st.qreg) lx.fail("gate before qreg declaration");
    RotationAngle angle = word == "t" ? RotationAngle::t() : RotationAngle::tdg();
    if (word == "rz") {
      lx.expect("(");
      const double lambda = parse_expr(lx);
      lx.expect(")");
      angle = RotationAngle::rz(lambda / 2);
    }
    st.circuit.ops.emplace_back(ZRotation{parse_operand(lx, *st.qreg), angle});
  } else if (const auto it = clifford_gates().find(word); it != clifford_gates().end()) {
    if (!st.qreg) lx.fail("gate before qreg declaration");
    const std::size_t a = parse_operand(lx, *st.qreg);
    if (is_two_qubit(it->second)) {
      lx.expect(",");
      const std::size_t b = parse_operand(lx, *st.qreg);
      if (a == b) {
        throw ValidationError("line " + std::to_string(lx.line()) + ": " + word + " needs two distinct qubits");
      }
      st.circuit.ops.emplace_back(CliffordGate::two(it->second, a, b));
    } else {
      st.circuit.ops.emplace_back(CliffordGate::one(it->second, a));
    }
  } else {
    unsupported("unsupported gate '" + word + "'");
  }
  if (lx.peek().kind != Token::Kind::End) lx.fail("trailing tokens after '" + word + "'");
}

}  // namespace

GateCircuit parse_qasm(std::string_view text) {
  ParserState st;
  std::string stmt;
  std::size_t line = 1;
  std::size_t stmt_line = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i + 1 < text.size() && text[i + 1] != '\n') ++i;
      continue;
    }
    if (c == '\n') ++line;
    if (c == ';') {
      Lexer lx(stmt, stmt_line == 0 ? line : stmt_line);
      parse_statement(lx, st);
      stmt.clear();
      stmt_line = 0;
      continue;
    }
    if (stmt_line == 0 && !std::isspace(static_cast<unsigned char>(c))) stmt_line = line;
    stmt.push_back(c);
  }
  if (stmt_line != 0) throw ParseError(stmt_line, "statement is missing its terminating ';'");
  if (!st.qreg) throw ParseError(line, "no qreg declared");
  return st.circuit;
}

}  // namespace ppmsched
