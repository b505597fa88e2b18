#pragma once

// Recursive-descent parser shared by polynomial and algebra-element input.
//
//   expr   := ["-"] term (("+" | "-") term)*
//   term   := factor ("*" factor)*
//   factor := base ("^" natural)?
//   base   := rational | identifier | "(" expr ")"
//
// Juxtaposition is rejected. Multiplication keeps left-to-right order, so the
// same grammar serves the noncommutative element ring.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "tgwa/errors.hpp"
#include "tgwa/exact_arith.hpp"

namespace tgwa {

// Ops must provide:
//   using Value = ...;
//   Value constant(const Rational&);
//   Value identifier(std::string_view name, std::size_t position);
//   Value add(Value, Value); Value sub(Value, Value); Value mul(Value, Value);
//   Value neg(Value); Value one();
template <class Ops>
class ExpressionParser {
 public:
  using Value = typename Ops::Value;

  ExpressionParser(std::string_view text, Ops& ops) : text_(text), ops_(ops) {}

  Value parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  Value expr() {
    bool negate = accept('-');
    Value v = term();
    if (negate) v = ops_.neg(std::move(v));
    for (;;) {
      if (accept('+')) {
        v = ops_.add(std::move(v), term());
      } else if (accept('-')) {
        v = ops_.sub(std::move(v), term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = factor();
    while (accept('*')) v = ops_.mul(std::move(v), factor());
    char c = peek();
    if (c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_')
      fail("expected an operator (juxtaposition is not multiplication)");
    return v;
  }

  Value factor() {
    Value b = base();
    if (!accept('^')) return b;
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural-number exponent");
    unsigned long k = std::stoul(std::string(text_.substr(start, pos_ - start)));
    Value acc = ops_.one();
    for (unsigned long i = 0; i < k; ++i) acc = ops_.mul(std::move(acc), b);
    return acc;
  }

  Value base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Value v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den == pos_) fail("expected a denominator");
      }
      Rational r;
      try {
        r = parse_rational(text_.substr(start, pos_ - start));
      } catch (const SyntaxError&) {
        throw SyntaxError(start, "invalid rational constant");
      }
      return ops_.constant(r);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      return ops_.identifier(text_.substr(start, pos_ - start), start);
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  Ops& ops_;
  std::size_t pos_ = 0;
};

}  // namespace tgwa
