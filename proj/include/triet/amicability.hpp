#pragma once

#include <cstddef>

#include "triet/errors.hpp"
#include "triet/morphism.hpp"
#include "triet/words.hpp"

namespace triet {

using BinaryMorphism = Morphism<Binary, Binary>;
using TernaryMorphism = Morphism<Ternary, Ternary>;

/** Outcome of the streaming parse of a pair of binary words. */
struct Ternarization {
  Word<Ternary> word;   // ternary reading of the parsed prefix
  std::size_t consumed; // letters consumed from each input
  bool dangling;        // stopped on a 01/10 block cut by the window edge
};

/**
 * Longest parse of aligned prefixes of u and v: equal letters read as A
 * (on 0) or C (on 1); a (0,1) column followed by a (1,0) column reads as
 * B and consumes both. Stops at the first column that fits no rule;
 * dangling marks a final (0,1) column whose successor lies beyond the
 * shorter input, which a longer window could still complete.
 */
inline Ternarization ternarize_prefix(const Word<Binary>& u, const Word<Binary>& v) {
  Ternarization out{{}, 0, false};
  const std::size_t limit = std::min(u.size(), v.size());
  std::size_t i = 0;
  while (i < limit) {
    if (u[i] == v[i]) {
      out.word.push_back(u[i] == Binary::Zero ? Ternary::A : Ternary::C);
      ++i;
      continue;
    }
    if (u[i] == Binary::Zero) {  // column (0,1): candidate pair block
      if (i + 1 >= limit) {
        out.dangling = true;
        break;
      }
      if (u[i + 1] == Binary::One && v[i + 1] == Binary::Zero) {
        out.word.push_back(Ternary::B);
        i += 2;
        continue;
      }
    }
    break;
  }
  out.consumed = i;
  return out;
}

/** Full parse of two words of equal length; see ternarize_prefix. */
inline Word<Ternary> ternarize_words(const Word<Binary>& u, const Word<Binary>& v) {
  if (u.size() != v.size()) throw LengthMismatch("words must have equal length");
  Ternarization t = ternarize_prefix(u, v);
  if (t.consumed != u.size())
    throw NotAmicable("words disagree at position " + std::to_string(t.consumed));
  return t.word;
}

inline bool is_amicable(const Word<Binary>& u, const Word<Binary>& v) {
  if (u.size() != v.size()) return false;
  Ternarization t = ternarize_prefix(u, v);
  return t.consumed == u.size();
}

/** Images of 0, of 1, and of 01 against 10 must all parse. */
inline bool is_amicable_morphisms(const BinaryMorphism& phi, const BinaryMorphism& psi) {
  const auto &p0 = phi.image(Binary::Zero), &p1 = phi.image(Binary::One);
  const auto &q0 = psi.image(Binary::Zero), &q1 = psi.image(Binary::One);
  return is_amicable(p0, q0) && is_amicable(p1, q1) && is_amicable(p0 + p1, q1 + q0);
}

/** Ternary morphism induced by an amicable pair. */
inline TernaryMorphism ternarize_morphisms(const BinaryMorphism& phi, const BinaryMorphism& psi) {
  const auto &p0 = phi.image(Binary::Zero), &p1 = phi.image(Binary::One);
  const auto &q0 = psi.image(Binary::Zero), &q1 = psi.image(Binary::One);
  return TernaryMorphism({ternarize_words(p0, q0),
                          ternarize_words(p0 + p1, q1 + q0),
                          ternarize_words(p1, q1)});
}

struct TernaryFixedPoint {
  TernaryMorphism eta;
  Word<Ternary> prefix;
  Letter seed;
};

/**
 * Fixed point data of the induced ternary morphism. The seed follows the
 * two possible shapes of an amicable pair with fixed points: a letter X
 * fixed by both phi and psi seeds A (X = 0) or C (X = 1); otherwise both
 * images of phi must start with 0 and both images of psi with 1, which
 * seeds B. Ties prefer the alphabetically smaller letter.
 */
inline TernaryFixedPoint ternarization_fixed_point(const BinaryMorphism& phi,
                                                   const BinaryMorphism& psi,
                                                   std::size_t len) {
  if (!is_primitive(phi) || !is_primitive(psi))
    throw NotPrimitive("both morphisms must be primitive");
  TernaryMorphism eta = ternarize_morphisms(phi, psi);  // NotAmicable when it is not
  auto starts = [](const BinaryMorphism& m, Letter a, Letter with) {
    return m.image(a)[0] == with;
  };
  Letter seed;
  if (starts(phi, Binary::Zero, Binary::Zero) && starts(psi, Binary::Zero, Binary::Zero))
    seed = Ternary::A;
  else if (starts(phi, Binary::One, Binary::One) && starts(psi, Binary::One, Binary::One))
    seed = Ternary::C;
  else if (starts(phi, Binary::Zero, Binary::Zero) && starts(phi, Binary::One, Binary::Zero) &&
           starts(psi, Binary::Zero, Binary::One) && starts(psi, Binary::One, Binary::One))
    seed = Ternary::B;
  else
    throw NoFixedPoint("the pair admits no common fixed point seed");
  return {eta, fixed_point_prefix(eta, len, seed), seed};
}

}  // namespace triet
