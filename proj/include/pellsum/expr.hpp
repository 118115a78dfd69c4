#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <string_view>

#include "pellsum/errors.hpp"
#include "pellsum/rational.hpp"

namespace pellsum {

// Recursive-descent reader for small arithmetic expressions:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' exponent)?
//   primary := integer | identifier | '(' expr ')'
//
// Exponents are (optionally signed, optionally parenthesized) integers.
// Identifiers are resolved by the caller; V needs V(long), the four
// operators and an ADL-visible pow(V, long).
template <class V>
class ExprReader {
 public:
  using Resolver = std::function<V(std::string_view)>;

  ExprReader(std::string_view text, Resolver resolve) : s_(text), resolve_(std::move(resolve)) {}

  V parse() {
    V v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  V expr() {
    V v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  V term() {
    V v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        v = v / unary();
      } else {
        return v;
      }
    }
  }

  V unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  V power() {
    V base = primary();
    if (!accept('^')) return base;
    return pow(base, exponent());
  }

  long exponent() {
    if (accept('(')) {
      long e = exponent();
      expect(')');
      return e;
    }
    bool negative = accept('-');
    if (!negative) accept('+');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    long e = std::stol(std::string(s_.substr(start, pos_ - start)));
    return negative ? -e : e;
  }

  V primary() {
    skip_ws();
    if (accept('(')) {
      V v = expr();
      expect(')');
      return v;
    }
    if (pos_ >= s_.size()) fail("unexpected end of input");
    std::size_t start = pos_;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return V(std::stol(std::string(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return resolve_(s_.substr(start, pos_ - start));
    }
    fail("unexpected character");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InvalidInput(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace pellsum
