// Copyright 2026 The strongirr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Polynomial text grammar.
//
//   expr    := [sign] term { ('+' | '-') term }
//   term    := power { ['*'] power }
//   power   := primary [ '^' ['-' | '+'] NUMBER ]
//   primary := NUMBER ['/' NUMBER] | VAR | '(' expr ')'
//   VAR     := 'x' N (N >= 1) | 'z' N (N >= 0) | 't' | 't' N (N >= 1)
//
// `t` alone names the first variable. Names from the z family cannot be
// mixed with x or t names in one polynomial. Errors carry a 1-based line and
// column.

#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strongirr/ring.hpp"

namespace strongirr {

class ParseError : public InputError {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : InputError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct ParseOptions {
  bool laurent = false;
  /// Variable count of the result ring; 0 means "as many as the text uses".
  std::size_t nvars = 0;
};

namespace detail {

struct Token {
  enum Kind { number, variable, plus, minus, star, slash, caret, lparen, rparen, end } kind;
  std::string text;
  std::size_t var = 0;  // variable index for Kind::variable
  std::size_t line = 1, column = 1;
};

enum class NameFamily { none, xt, z };

inline std::vector<Token> tokenize(std::string_view s, NameFamily& family) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> void { throw ParseError(msg, line, col); };
  auto note_family = [&](NameFamily f) {
    if (family != NameFamily::none && family != f) fail("cannot mix z-variables with x/t variables");
    family = f;
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++col;
      continue;
    }
    Token tok{Token::end, "", 0, line, col};
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      tok.kind = Token::number;
      tok.text = std::string(s.substr(start, i - start));
    } else if (c == 'x' || c == 'z' || c == 't') {
      ++i;
      std::size_t dstart = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string digits(s.substr(dstart, i - dstart));
      tok.kind = Token::variable;
      tok.text = std::string(s.substr(start, i - start));
      if (digits.size() > 6) fail("variable index too large");
      if (c == 't' && digits.empty()) {
        note_family(NameFamily::xt);
        tok.var = 0;
      } else {
        if (digits.empty()) fail("variable name needs an index");
        long n = std::stol(digits);
        if (c == 'z') {
          note_family(NameFamily::z);
          tok.var = static_cast<std::size_t>(n);
        } else {
          note_family(NameFamily::xt);
          if (n < 1) fail("variable indices start at 1");
          tok.var = static_cast<std::size_t>(n - 1);
        }
      }
    } else {
      switch (c) {
        case '+': tok.kind = Token::plus; break;
        case '-': tok.kind = Token::minus; break;
        case '*': tok.kind = Token::star; break;
        case '/': tok.kind = Token::slash; break;
        case '^': tok.kind = Token::caret; break;
        case '(': tok.kind = Token::lparen; break;
        case ')': tok.kind = Token::rparen; break;
        default: fail(std::string("unexpected character '") + c + "'");
      }
      ++i;
      tok.text = std::string(1, c);
    }
    col += i - start;
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Token::end, "", 0, line, col});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Ring ring) : toks_(std::move(toks)), ring_(ring) {}

  Poly<Rat> parse() {
    Poly<Rat> p = expr();
    if (peek().kind != Token::end) fail("unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, peek().line, peek().column);
  }

  static bool starts_primary(Token::Kind k) {
    return k == Token::number || k == Token::variable || k == Token::lparen;
  }

  Poly<Rat> expr() {
    bool negate = false;
    if (peek().kind == Token::minus || peek().kind == Token::plus) negate = next().kind == Token::minus;
    Poly<Rat> acc = term();
    if (negate) acc = -acc;
    while (peek().kind == Token::plus || peek().kind == Token::minus) {
      bool minus = next().kind == Token::minus;
      Poly<Rat> t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Poly<Rat> term() {
    if (!starts_primary(peek().kind)) fail(peek().kind == Token::end ? "unexpected end of input" : "expected a term");
    Poly<Rat> acc = power();
    for (;;) {
      if (peek().kind == Token::star) {
        next();
        if (!starts_primary(peek().kind)) fail("expected a factor after '*'");
        acc = acc * power();
      } else if (starts_primary(peek().kind)) {
        acc = acc * power();
      } else {
        return acc;
      }
    }
  }

  Poly<Rat> power() {
    const Token at = peek();
    Poly<Rat> base = primary();
    if (peek().kind != Token::caret) return base;
    next();
    bool negative = false;
    if (peek().kind == Token::minus || peek().kind == Token::plus) negative = next().kind == Token::minus;
    if (peek().kind != Token::number) fail("expected an integer exponent");
    const Token& num = next();
    if (num.text.size() > 6) throw ParseError("exponent too large", num.line, num.column);
    long e = std::stol(num.text);
    if (negative) e = -e;
    if (e < 0) {
      if (!ring_.laurent)
        throw ParseError("negative exponent requires a Laurent ring (--laurent)", num.line, num.column);
      if (!is_laurent_unit(base) && !base.is_constant())
        throw ParseError("negative exponent of a non-monomial", at.line, at.column);
      if (base.is_constant()) {
        if (base.is_zero()) throw ParseError("zero to a negative power", at.line, at.column);
        Rat c = base.constant_term();
        Rat r = 1;
        for (long k = 0; k < -e; ++k) r /= c;
        return Poly<Rat>::constant(ring_, r);
      }
      const auto& [m, c] = base.leading();
      Rat inv = 1 / c;
      Poly<Rat> unit = Poly<Rat>::monomial(ring_, m.inverse(), inv);
      return pow(unit, -e);
    }
    return pow(base, e);
  }

  Poly<Rat> primary() {
    const Token& tok = next();
    switch (tok.kind) {
      case Token::number: {
        Rat value(Int(tok.text));
        if (peek().kind == Token::slash) {
          next();
          if (peek().kind != Token::number) fail("expected a denominator");
          Int den(next().text);
          if (den == 0) throw ParseError("zero denominator", tok.line, tok.column);
          value = Rat(Int(tok.text), den);
          value.canonicalize();
        }
        return Poly<Rat>::constant(ring_, value);
      }
      case Token::variable:
        if (tok.var >= ring_.nvars)
          throw ParseError("variable " + tok.text + " outside the declared variable count", tok.line, tok.column);
        return Poly<Rat>::variable(ring_, tok.var);
      case Token::lparen: {
        Poly<Rat> inner = expr();
        if (peek().kind != Token::rparen) fail("expected ')'");
        next();
        return inner;
      }
      default:
        --pos_;
        fail("expected a number, variable or '('");
    }
  }

  std::vector<Token> toks_;
  Ring ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses text into a rational polynomial.
inline Poly<Rat> parse_polynomial(std::string_view text, const ParseOptions& opts = {}) {
  detail::NameFamily family = detail::NameFamily::none;
  auto toks = detail::tokenize(text, family);
  std::size_t used = 0;
  for (const auto& t : toks)
    if (t.kind == detail::Token::variable) used = std::max(used, t.var + 1);
  std::size_t nvars = opts.nvars == 0 ? std::max<std::size_t>(used, 1) : opts.nvars;
  if (used > nvars) {
    for (const auto& t : toks)
      if (t.kind == detail::Token::variable && t.var >= nvars)
        throw ParseError("variable " + t.text + " outside the declared variable count", t.line, t.column);
  }
  detail::Parser parser(std::move(toks), Ring{nvars, opts.laurent});
  return parser.parse();
}

/// Parses text that must have integer coefficients.
inline Poly<Int> parse_int_polynomial(std::string_view text, const ParseOptions& opts = {}) {
  return to_integer(parse_polynomial(text, opts));
}

}  // namespace strongirr
