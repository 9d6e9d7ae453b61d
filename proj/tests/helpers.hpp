#pragma once

#include <random>

#include "triet/triet.hpp"

namespace testutil {

using triet::BigInt;
using triet::Quadratic;
using triet::Rational;

using Rng = std::mt19937_64;

inline Rational rand_rational(Rng& rng, long num_bound = 50, long den_bound = 12) {
  std::uniform_int_distribution<long> nd(-num_bound, num_bound), dd(1, den_bound);
  return Rational(nd(rng), dd(rng));
}

inline BigInt rand_radicand(Rng& rng) {
  static const long choices[] = {2, 3, 5, 6, 7, 10, 13};
  std::uniform_int_distribution<std::size_t> idx(0, std::size(choices) - 1);
  return BigInt(choices[idx(rng)]);
}

inline Quadratic rand_quadratic(Rng& rng, const BigInt& d) {
  return Quadratic::make(rand_rational(rng), rand_rational(rng), d);
}

/** Sign according to a 100 digit decimal evaluation; the differential
    oracle for the exact sign routine. */
inline int decimal_sign(const Quadratic& x) {
  triet::Decimal v = triet::to_decimal(x);
  if (v == 0) return 0;
  return v > 0 ? 1 : -1;
}

inline triet::Word<triet::Ternary> rand_ternary_word(Rng& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> ld(1, max_len);
  std::uniform_int_distribution<int> ad(0, 2);
  triet::Word<triet::Ternary> w;
  std::size_t n = ld(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<triet::Letter>(ad(rng)));
  return w;
}

}  // namespace testutil
