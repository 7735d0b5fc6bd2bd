#pragma once

// Recursive-descent reader for the arithmetic text syntax shared by the
// polynomial, Laurent and ideal front ends:
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := power (('*'|'/') power | power)*      juxtaposition multiplies
//   power  := primary ['^' exponent]
//   exponent := int | '{' int '}' | '(' int ')'       int may be negative
//   primary  := digits | identifier | '(' expr ')'
//
// '-' is accepted as a synonym for '+' since every ring here has
// characteristic 2.

#include <cctype>
#include <string>
#include <string_view>

#include "concordia/error.hpp"

namespace concordia {

template <class Ops>
class ExpressionParser {
 public:
  using Value = typename Ops::Value;

  ExpressionParser(const Ops& ops, std::string_view text) : ops_(ops), text_(text) {}

  Value parse() {
    Value v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::ParseError,
                msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool starts_primary() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  Value expr() {
    if (!accept('+')) accept('-');
    Value v = term();
    while (true) {
      if (accept('+') || accept('-')) {
        v = ops_.add(v, term());
      } else {
        return v;
      }
    }
  }

  Value term() {
    Value v = power();
    while (true) {
      if (accept('*')) {
        v = ops_.mul(v, power());
      } else if (accept('/')) {
        v = ops_.div(v, power());
      } else if (starts_primary()) {
        v = ops_.mul(v, power());
      } else {
        return v;
      }
    }
  }

  Value power() {
    Value base = primary();
    if (!accept('^')) return base;
    return ops_.pow(base, exponent());
  }

  long exponent() {
    char close = 0;
    if (accept('{')) close = '}';
    else if (accept('(')) close = ')';
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    skip_space();
    long n = digits();
    if (close) expect(close);
    return negative ? -n : n;
  }

  long digits() {
    std::size_t start = pos_;
    long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_] - '0');
      if (n > 1'000'000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return n;
  }

  Value primary() {
    skip_space();
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ops_.from_int(digits());
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      return ops_.atom(name);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const Ops& ops_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace concordia
