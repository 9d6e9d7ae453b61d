#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace triet {

// Arbitrary precision integers and rationals. cpp_rational keeps values in
// lowest terms with a positive denominator, which is exactly the canonical
// form required here.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

inline int sign(const Rational& q) { return q.sign(); }

/** Largest integer n with n <= q. */
inline BigInt floor_rational(const Rational& q) {
  BigInt n = num(q), d = den(q);
  BigInt t = n / d;
  if (n < 0 && t * d != n) --t;
  return t;
}

/** Rational literal: "7", "-3", "3/2", "-1/3". */
inline std::string rational_str(const Rational& q) {
  std::string s = num(q).str();
  if (!is_integer(q)) s += "/" + den(q).str();
  return s;
}

}  // namespace triet
