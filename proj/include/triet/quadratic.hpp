#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <iomanip>
#include <sstream>
#include <string>
#include <utility>

#include "triet/errors.hpp"
#include "triet/rational.hpp"

namespace triet {

namespace detail {

/** Writes D = s*s*f with f squarefree. Trial division; radicands are expected
    to stay desk sized. */
inline void squarefree_decompose(BigInt D, BigInt& s, BigInt& f) {
  s = 1;
  f = 1;
  for (BigInt p = 2; p * p <= D; ++p) {
    unsigned e = 0;
    while (D % p == 0) {
      D /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) s *= p;
    if (e % 2 == 1) f *= p;
  }
  f *= D;
}

}  // namespace detail

/**
 * Element a + b*sqrt(d) of a real quadratic field, held exactly.
 *
 * Canonical form: d is squarefree and at least 2; rational values carry
 * b == 0 and d == 0. All predicates, including ordering, are decided by
 * exact integer arithmetic; no floating point is involved.
 *
 * Binary operations mixing two distinct irrational fields throw
 * MixedFields. Equality is the exception: values in distinct fields are
 * simply unequal.
 */
class Quadratic {
 public:
  Quadratic() : a_(0), b_(0), d_(0) {}
  Quadratic(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
  Quadratic(const BigInt& a) : a_(a), b_(0), d_(0) {}
  Quadratic(int a) : a_(a), b_(0), d_(0) {}

  /** Canonicalizing constructor for a + b*sqrt(radicand), radicand >= 1. */
  static Quadratic make(Rational a, Rational b, BigInt radicand) {
    if (radicand <= 0) throw InvalidParameters("radicand must be a positive integer");
    if (b == 0) return Quadratic(std::move(a));
    BigInt s, f;
    detail::squarefree_decompose(radicand, s, f);
    if (f == 1) return Quadratic(a + b * Rational(s));
    return Quadratic(std::move(a), b * Rational(s), f);
  }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_integer() const { return b_ == 0 && triet::is_integer(a_); }

  /** -1, 0 or +1. Case analysis on a^2 versus b^2 d; exact. */
  int sign() const {
    if (b_ == 0) return triet::sign(a_);
    if (a_ == 0) return triet::sign(b_);
    int sa = triet::sign(a_), sb = triet::sign(b_);
    if (sa == sb) return sa;
    // Opposite signs: the larger of a^2 and b^2 d decides.
    Rational lhs = a_ * a_, rhs = b_ * b_ * Rational(d_);
    int cmp = lhs.compare(rhs);
    // a^2 == b^2 d would force sqrt(d) rational; cannot happen in canonical form.
    return cmp > 0 ? sa : sb;
  }

  Quadratic conj() const { return Quadratic(a_, -b_, d_); }

  friend Quadratic operator-(const Quadratic& x) { return Quadratic(-x.a_, -x.b_, x.d_); }

  friend Quadratic operator+(const Quadratic& x, const Quadratic& y) {
    BigInt d = common_field(x, y);
    return Quadratic(x.a_ + y.a_, x.b_ + y.b_, d);
  }

  friend Quadratic operator-(const Quadratic& x, const Quadratic& y) {
    BigInt d = common_field(x, y);
    return Quadratic(x.a_ - y.a_, x.b_ - y.b_, d);
  }

  friend Quadratic operator*(const Quadratic& x, const Quadratic& y) {
    BigInt d = common_field(x, y);
    return Quadratic(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                     x.a_ * y.b_ + x.b_ * y.a_, d);
  }

  friend Quadratic operator/(const Quadratic& x, const Quadratic& y) {
    BigInt d = common_field(x, y);
    if (y.sign() == 0) throw DivisionByZero();
    Rational n = y.a_ * y.a_ - y.b_ * y.b_ * Rational(d);  // field norm of y
    Quadratic num = x * y.conj();
    return Quadratic(num.a_ / n, num.b_ / n, d);
  }

  Quadratic& operator+=(const Quadratic& y) { return *this = *this + y; }
  Quadratic& operator-=(const Quadratic& y) { return *this = *this - y; }
  Quadratic& operator*=(const Quadratic& y) { return *this = *this * y; }
  Quadratic& operator/=(const Quadratic& y) { return *this = *this / y; }

  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
  }
  friend bool operator!=(const Quadratic& x, const Quadratic& y) { return !(x == y); }
  friend bool operator<(const Quadratic& x, const Quadratic& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Quadratic& x, const Quadratic& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Quadratic& x, const Quadratic& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Quadratic& x, const Quadratic& y) { return (x - y).sign() >= 0; }

  /** Largest integer n with n <= value. Binary search over exact sign tests. */
  BigInt floor() const {
    if (b_ == 0) return floor_rational(a_);
    BigInt bound = abs(floor_rational(a_)) + 1 +
                   (abs(floor_rational(b_)) + 1) * (boost::multiprecision::sqrt(d_) + 1);
    BigInt lo = -bound, hi = bound + 1;  // lo <= value < hi
    while (hi - lo > 1) {
      BigInt mid = lo + (hi - lo) / 2;
      if ((*this - Quadratic(Rational(mid))).sign() >= 0)
        lo = mid;
      else
        hi = mid;
    }
    return lo;
  }

  /** Canonical literal, e.g. "3/2-1/2*sqrt(5)"; rationals print bare. */
  std::string str() const {
    if (b_ == 0) return rational_str(a_);
    std::string s = rational_str(a_);
    s += triet::sign(b_) < 0 ? '-' : '+';
    s += rational_str(abs(b_));
    s += "*sqrt(" + d_.str() + ")";
    return s;
  }

 private:
  Quadratic(Rational a, Rational b, BigInt d)
      : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
    if (b_ == 0) d_ = 0;
  }

  static BigInt common_field(const Quadratic& x, const Quadratic& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw MixedFields();
  }

  Rational a_, b_;
  BigInt d_;
};

inline Rational trace(const Quadratic& x) { return 2 * x.a(); }

inline Rational norm(const Quadratic& x) {
  return x.a() * x.a() - x.b() * x.b() * Rational(x.radicand());
}

inline Quadratic abs(const Quadratic& x) { return x.sign() < 0 ? -x : x; }

/**
 * Coordinates (s, t) of x in the basis (1, eps): x = s + t*eps.
 * eps must be irrational; x must be rational or lie in the same field.
 */
inline std::pair<Rational, Rational> coords_in_basis(const Quadratic& x, const Quadratic& eps) {
  if (eps.is_rational()) throw RationalBase();
  if (!x.is_rational() && x.radicand() != eps.radicand()) throw MixedFields();
  Rational t = x.b() / eps.b();
  Rational s = x.a() - t * eps.a();
  return {s, t};
}

/** Membership in Z[eps] = Z + Z*eps. */
inline bool in_z_basis(const Quadratic& x, const Quadratic& eps) {
  auto [s, t] = coords_in_basis(x, eps);
  return is_integer(s) && is_integer(t);
}

/** Quadratic irrational in (0,1) whose conjugate avoids (0,1). */
inline bool is_sturm_number(const Quadratic& eps) {
  if (eps.is_rational()) return false;
  if (eps.sign() <= 0 || (eps - Quadratic(1)).sign() >= 0) return false;
  Quadratic c = eps.conj();
  return !(c.sign() > 0 && (c - Quadratic(1)).sign() < 0);
}

/** Monic minimal polynomial over Q; degree 1 for rationals, else 2. */
struct MinimalPolynomial {
  unsigned degree;  // 1 or 2
  Rational c1;      // unused when degree == 1
  Rational c0;

  std::string str() const {
    auto term = [](const Rational& c, const std::string& mono) {
      std::string s = triet::sign(c) < 0 ? " - " : " + ";
      Rational m = abs(c);
      if (m == 1 && !mono.empty()) return s + mono;
      return s + rational_str(m) + (mono.empty() ? "" : "*" + mono);
    };
    std::string s = degree == 2 ? "x^2" : "x";
    if (degree == 2 && c1 != 0) s += term(c1, "x");
    if (c0 != 0) s += term(c0, "");
    return s;
  }
};

inline MinimalPolynomial minimal_polynomial(const Quadratic& x) {
  if (x.is_rational()) return {1, Rational(0), -x.a()};
  return {2, -trace(x), norm(x)};
}

/** Unit of the ring of integers: integral trace and norm, norm of modulus 1. */
inline bool is_quadratic_unit(const Quadratic& x) {
  if (x.is_rational()) return false;
  Rational n = norm(x);
  return is_integer(trace(x)) && is_integer(n) && abs(n) == 1;
}

using Decimal = boost::multiprecision::cpp_dec_float_100;

/** 100 significant digit approximation; for display and cross checks only. */
inline Decimal to_decimal(const Quadratic& x) {
  auto rat = [](const Rational& q) { return Decimal(num(q).str()) / Decimal(den(q).str()); };
  Decimal v = rat(x.a());
  if (!x.is_rational())
    v += rat(x.b()) * sqrt(Decimal(x.radicand().str()));
  return v;
}

/** Decimal rendering with the given number of significant digits. */
inline std::string approx_str(const Quadratic& x, int digits = 15) {
  std::ostringstream os;
  os << std::setprecision(digits) << to_decimal(x);
  return os.str();
}

}  // namespace triet
