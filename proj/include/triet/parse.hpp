#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "triet/errors.hpp"
#include "triet/quadratic.hpp"
#include "triet/rational.hpp"

namespace triet {

namespace detail {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }

  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }

  bool eat_prefix(std::string_view p) {
    if (s.substr(pos, p.size()) != p) return false;
    pos += p.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos) + " in \"" +
                     std::string(s) + "\"");
  }

  BigInt digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    BigInt v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (s[pos] - '0');
      ++pos;
    }
    return v;
  }

  // '-'? digits ('/' digits)?
  Rational rational() {
    bool neg = eat('-');
    BigInt n = digits();
    BigInt d = 1;
    if (eat('/')) {
      d = digits();
      if (d == 0) fail("zero denominator");
    }
    Rational q(n, d);
    return neg ? -q : q;
  }
};

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Rational parse_rational(std::string_view text) {
  detail::Cursor c{detail::trim(text)};
  Rational q = c.rational();
  if (!c.done()) c.fail("trailing characters");
  return q;
}

/** Literal grammar: RAT (('+'|'-') RAT '*sqrt(' digits ')')?
    with RAT ::= '-'? digits ('/' digits)?. No interior whitespace. */
inline Quadratic parse_quadratic(std::string_view text) {
  detail::Cursor c{detail::trim(text)};
  Rational a = c.rational();
  if (c.done()) return Quadratic(a);
  int sgn;
  if (c.eat('+'))
    sgn = 1;
  else if (c.eat('-'))
    sgn = -1;
  else
    c.fail("expected '+', '-' or end of literal");
  Rational b = c.rational();
  if (!c.eat_prefix("*sqrt(")) c.fail("expected '*sqrt('");
  BigInt d = c.digits();
  c.expect(')');
  if (!c.done()) c.fail("trailing characters");
  if (d == 0) c.fail("radicand must be positive");
  return Quadratic::make(a, sgn > 0 ? b : -b, d);
}

}  // namespace triet
