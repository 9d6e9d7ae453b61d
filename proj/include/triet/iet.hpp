#pragma once

#include <algorithm>
#include <vector>

#include "triet/errors.hpp"
#include "triet/quadratic.hpp"
#include "triet/words.hpp"

namespace triet {

/**
 * Exchange T of three intervals of [c, c+l) with permutation (3,2,1):
 *
 *   I_A = [c, c+l-1+eps)      T(x) = x + 1 - eps
 *   I_B = [c+l-1+eps, c+eps)  T(x) = x + 1 - 2 eps
 *   I_C = [c+eps, c+l)        T(x) = x - eps
 *
 * Parameters satisfy eps irrational in (0,1), max(eps, 1-eps) < l < 1 and
 * c <= 0 < c+l, so the coded point 0 lies in the domain.
 */
class IetParams {
 public:
  IetParams(Quadratic eps, Quadratic l, Quadratic c)
      : eps_(std::move(eps)), l_(std::move(l)), c_(std::move(c)) {
    if (eps_.is_rational() || eps_.sign() <= 0 || eps_ >= Quadratic(1))
      throw InvalidParameters("eps must be irrational and inside (0,1)");
    Quadratic lo = std::max(eps_, Quadratic(1) - eps_);
    if (l_ <= lo || l_ >= Quadratic(1))
      throw InvalidParameters("l must satisfy max(eps, 1-eps) < l < 1");
    if (c_.sign() > 0 || (c_ + l_).sign() <= 0)
      throw InvalidParameters("c must satisfy c <= 0 < c+l");
  }

  const Quadratic& eps() const { return eps_; }
  const Quadratic& l() const { return l_; }
  const Quadratic& c() const { return c_; }

  Quadratic left() const { return c_; }
  Quadratic right() const { return c_ + l_; }

  Letter letter_at(const Quadratic& x) const {
    if (x < c_ || x >= right()) throw InvalidParameters("point outside the exchange domain");
    if (x < c_ + l_ - Quadratic(1) + eps_) return Ternary::A;
    if (x < c_ + eps_) return Ternary::B;
    return Ternary::C;
  }

  Quadratic transform(const Quadratic& x) const {
    switch (letter_at(x)) {
      case Ternary::A: return x + Quadratic(1) - eps_;
      case Ternary::B: return x + Quadratic(1) - eps_ - eps_;
      default: return x - eps_;
    }
  }

  /** Inverse branch. T maps I_A onto [c+1-eps, c+l), I_B onto
      [c+l-eps, c+1-eps) and I_C onto [c, c+l-eps), a partition of the
      domain, so the preimage is determined by these three ranges. */
  Quadratic inverse_transform(const Quadratic& y) const {
    if (y < c_ || y >= right()) throw InvalidParameters("point outside the exchange domain");
    if (y >= c_ + Quadratic(1) - eps_) return y - Quadratic(1) + eps_;
    if (y >= c_ + l_ - eps_) return y - Quadratic(1) + eps_ + eps_;
    return y + eps_;
  }

  /** T^n(0) for any integer n. */
  Quadratic orbit_point(long n) const {
    Quadratic x = 0;
    for (long k = 0; k < n; ++k) x = transform(x);
    for (long k = 0; k > n; --k) x = inverse_transform(x);
    return x;
  }

  /** Coding window u_from ... | u_0 ... u_to of the orbit of 0. */
  BiWindow<Ternary> code(long from, long to) const {
    if (from > 0 || to < 0) throw InvalidParameters("coding window must contain index 0");
    Word<Ternary> right_part;
    Quadratic x = 0;
    for (long n = 0;; ++n) {
      right_part.push_back(letter_at(x));
      if (n == to) break;
      x = transform(x);
    }
    std::vector<Letter> rev;
    x = 0;
    for (long n = -1; n >= from; --n) {
      x = inverse_transform(x);
      rev.push_back(letter_at(x));
    }
    std::reverse(rev.begin(), rev.end());
    return BiWindow<Ternary>(Word<Ternary>(std::move(rev)), right_part);
  }

  /** True when l lies outside Z[eps]; factor counts then grow by 2 per step. */
  bool is_nondegenerate() const { return !in_z_basis(l_, eps_); }

 private:
  Quadratic eps_, l_, c_;
};

/** Rotation-style exchange of two intervals of [0,1): slope alpha in (0,1)
    irrational, initial point beta in [0,1). */
struct SturmianParams {
  Quadratic alpha, beta;

  SturmianParams(Quadratic a, Quadratic b) : alpha(std::move(a)), beta(std::move(b)) {
    if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= Quadratic(1))
      throw InvalidParameters("alpha must be irrational and inside (0,1)");
    if (beta.sign() < 0 || beta >= Quadratic(1))
      throw InvalidParameters("beta must lie in [0,1)");
  }
};

/** Selects which two letter block the letter B expands to. */
enum class SigmaVariant { v01, v10 };

/**
 * Slope and intercept of the two interval exchange that codes the image of
 * the orbit under sigma01 (beta = -c) or sigma10 (beta = 1-c-l).
 */
inline SturmianParams sturmian_params(const IetParams& p, SigmaVariant v) {
  Quadratic beta = v == SigmaVariant::v01 ? -p.c() : Quadratic(1) - p.c() - p.l();
  return SturmianParams(p.eps(), beta);
}

/** Coding window of the orbit of beta under y -> y + 1 - alpha on [0, alpha),
    y -> y - alpha on [alpha, 1); letter 0 on [0, alpha). */
inline BiWindow<Binary> two_iet_code(const SturmianParams& s, long from, long to) {
  if (from > 0 || to < 0) throw InvalidParameters("coding window must contain index 0");
  auto letter = [&](const Quadratic& y) {
    return y < s.alpha ? Letter(Binary::Zero) : Letter(Binary::One);
  };
  auto step = [&](const Quadratic& y) {
    return y < s.alpha ? y + Quadratic(1) - s.alpha : y - s.alpha;
  };
  auto back = [&](const Quadratic& y) {
    return y >= Quadratic(1) - s.alpha ? y - Quadratic(1) + s.alpha : y + s.alpha;
  };
  Word<Binary> right_part;
  Quadratic y = s.beta;
  for (long n = 0;; ++n) {
    right_part.push_back(letter(y));
    if (n == to) break;
    y = step(y);
  }
  std::vector<Letter> rev;
  y = s.beta;
  for (long n = -1; n >= from; --n) {
    y = back(y);
    rev.push_back(letter(y));
  }
  std::reverse(rev.begin(), rev.end());
  return BiWindow<Binary>(Word<Binary>(std::move(rev)), right_part);
}

/**
 * Confirms on the orbit window |n| <= n_max that T is the two interval
 * exchange F of [c, c+1) with marker c+eps, applied once on I_A and I_C
 * and twice on I_B, the intermediate point falling in [c+l, c+1).
 */
inline bool check_two_step(const IetParams& p, long n_max) {
  auto F = [&](const Quadratic& x) {
    return x < p.c() + p.eps() ? x + Quadratic(1) - p.eps() : x - p.eps();
  };
  auto holds_at = [&](const Quadratic& x) {
    Quadratic tx = p.transform(x);
    if (p.letter_at(x) == Ternary::B) {
      Quadratic mid = F(x);
      if (mid < p.right() || mid >= p.c() + Quadratic(1)) return false;
      return F(mid) == tx;
    }
    return F(x) == tx;
  };
  Quadratic x = 0;
  for (long n = 0; n <= n_max; ++n) {
    if (!holds_at(x)) return false;
    x = p.transform(x);
  }
  x = 0;
  for (long n = -1; n >= -n_max; --n) {
    x = p.inverse_transform(x);
    if (!holds_at(x)) return false;
  }
  return true;
}

}  // namespace triet
