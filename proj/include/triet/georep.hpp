#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "triet/amicability.hpp"
#include "triet/errors.hpp"
#include "triet/morphism.hpp"
#include "triet/perron.hpp"
#include "triet/quadratic.hpp"
#include "triet/words.hpp"

namespace triet {

/** Positive, pairwise distinct letter lengths; distinctness is what lets a
    gap be read back as a unique letter. */
template <class A>
class LengthAssignment {
 public:
  explicit LengthAssignment(std::array<Quadratic, A::size> len) : len_(std::move(len)) {
    for (const auto& x : len_)
      if (x.sign() <= 0) throw InvalidParameters("letter lengths must be positive");
    for (std::size_t i = 0; i < A::size; ++i)
      for (std::size_t j = i + 1; j < A::size; ++j)
        if (len_[i] == len_[j]) throw InvalidParameters("letter lengths must be distinct");
  }

  const Quadratic& of(Letter a) const { return len_[a]; }

 private:
  std::array<Quadratic, A::size> len_;
};

/** A word drawn on the half line: t_0 = 0 and t_{n+1} - t_n is the length
    of the n-th letter. Holds |word| + 1 points. */
template <class A>
struct GeoRep {
  Word<A> word;
  LengthAssignment<A> lengths;
  std::vector<Quadratic> points;
};

namespace detail {

template <class A>
void verify_rep(const GeoRep<A>& rep) {
  if (rep.points.size() != rep.word.size() + 1 || rep.points[0].sign() != 0)
    throw Error("internal: malformed geometric representation");
  for (std::size_t n = 0; n < rep.word.size(); ++n)
    if (rep.points[n + 1] - rep.points[n] != rep.lengths.of(rep.word[n]))
      throw Error("internal: gap does not match its letter");
}

}  // namespace detail

template <class A>
GeoRep<A> build_rep(const Word<A>& w, const LengthAssignment<A>& lengths) {
  std::vector<Quadratic> points;
  points.reserve(w.size() + 1);
  Quadratic t = 0;
  points.push_back(t);
  for (Letter a : w) {
    t += lengths.of(a);
    points.push_back(t);
  }
  return {w, lengths, std::move(points)};
}

/** Letter lengths of a primitive ternary morphism: the positive dominant
    eigenvector, scaled so the length of A is 1. */
inline LengthAssignment<Ternary> lengths_from_perron(const TernaryMorphism& eta) {
  if (!is_primitive(eta)) throw NotPrimitive("morphism is not primitive");
  PerronData pd = perron(eta);
  std::vector<Quadratic> v = pd.eigvec;
  if (v[0].sign() < 0)
    for (auto& x : v) x = -x;
  for (const auto& x : v)
    if (x.sign() <= 0) throw Error("internal: dominant eigenvector is not positive");
  return LengthAssignment<Ternary>({v[0] / v[0], v[1] / v[0], v[2] / v[0]});
}

/**
 * Tests whether stretching by the factor maps the point set into itself,
 * letter by letter: every gap whose stretched copy stays inside the window
 * must land on existing points, and all gaps of one letter must stretch to
 * one translation-invariant pattern. Returns the pattern of each letter
 * seen, as offsets from the stretched left endpoint.
 */
template <class A>
std::map<Letter, std::vector<Quadratic>> check_selfsimilar(const GeoRep<A>& rep,
                                                           const Quadratic& factor) {
  if (factor <= Quadratic(1)) throw InvalidParameters("stretch factor must exceed 1");
  // The points are data here, one more than the word has letters and
  // strictly increasing, but not required to reproduce the letter lengths:
  // that is exactly what a self-similarity check may refute.
  if (rep.points.size() != rep.word.size() + 1)
    throw InvalidParameters("a representation carries one point more than letters");
  for (std::size_t n = 0; n + 1 < rep.points.size(); ++n)
    if (!(rep.points[n] < rep.points[n + 1]))
      throw InvalidParameters("points must be strictly increasing");
  const auto& t = rep.points;
  const Quadratic& end = t.back();
  auto find = [&](const Quadratic& x) {
    auto it = std::lower_bound(t.begin(), t.end(), x);
    return it != t.end() && *it == x ? it : t.end();
  };
  std::map<Letter, std::vector<Quadratic>> patterns;
  bool any_safe = false;
  for (std::size_t n = 0; n < rep.word.size(); ++n) {
    Quadratic lo = factor * t[n], hi = factor * t[n + 1];
    if (hi > end) continue;  // the stretched gap leaves the window
    any_safe = true;
    auto lo_it = find(lo);
    if (lo_it == t.end() || find(hi) == t.end())
      throw NotSelfSimilar("stretched gap endpoints are not points of the set (gap " +
                               std::to_string(n) + ")",
                           n);
    std::vector<Quadratic> pattern;
    for (auto it = lo_it; it != t.end() && *it <= hi; ++it) pattern.push_back(*it - lo);
    auto [slot, fresh] = patterns.try_emplace(rep.word[n], pattern);
    if (!fresh && slot->second != pattern)
      throw NotSelfSimilar("gaps of one letter stretch to different patterns (gap " +
                               std::to_string(n) + ")",
                           n);
  }
  if (!any_safe) throw WindowTooShort("no stretched gap fits inside the window");
  return patterns;
}

/**
 * Reads the substitution realized by the stretch: the pattern of each
 * letter is decoded gap by gap through the injective length assignment.
 */
template <class A>
Morphism<A, A> substitution_from_geometry(const GeoRep<A>& rep, const Quadratic& factor) {
  auto patterns = check_selfsimilar(rep, factor);
  std::array<Word<A>, A::size> images;
  for (std::size_t a = 0; a < A::size; ++a) {
    auto it = patterns.find(static_cast<Letter>(a));
    if (it == patterns.end())
      throw WindowTooShort(std::string("letter '") + A::names[a] +
                           "' has no safely stretched gap in the window");
    const auto& pattern = it->second;
    for (std::size_t i = 0; i + 1 < pattern.size(); ++i) {
      Quadratic gap = pattern[i + 1] - pattern[i];
      bool matched = false;
      for (std::size_t b = 0; b < A::size && !matched; ++b)
        if (gap == rep.lengths.of(static_cast<Letter>(b))) {
          images[a].push_back(static_cast<Letter>(b));
          matched = true;
        }
      if (!matched)
        throw AmbiguousLength("a stretched gap matches no letter length");
    }
  }
  return Morphism<A, A>(std::move(images));
}

struct SturmianReps {
  GeoRep<Binary> rep01;
  GeoRep<Binary> rep10;
};

/**
 * The two Sturmian refinements of a ternary representation whose B gaps
 * split as A plus C: one extra point inside every B gap, at offset
 * length(A) (reading 01) or length(C) (reading 10). Letter lengths of the
 * refined sets are length(A) for 0 and length(C) for 1.
 */
inline SturmianReps sturmian_insertions(const GeoRep<Ternary>& rep) {
  detail::verify_rep(rep);
  const Quadratic &la = rep.lengths.of(Ternary::A), &lb = rep.lengths.of(Ternary::B),
                  &lc = rep.lengths.of(Ternary::C);
  if (lb != la + lc)
    throw LengthMismatch("length of B must be the sum of the lengths of A and C");
  LengthAssignment<Binary> two({la, lc});
  auto refine = [&](const Quadratic& offset, const Morphism<Ternary, Binary>& proj) {
    GeoRep<Binary> out{proj(rep.word), two, {}};
    out.points.reserve(rep.points.size() + rep.word.size());
    for (std::size_t n = 0; n < rep.word.size(); ++n) {
      out.points.push_back(rep.points[n]);
      if (rep.word[n] == Ternary::B) out.points.push_back(rep.points[n] + offset);
    }
    out.points.push_back(rep.points.back());
    detail::verify_rep(out);
    return out;
  };
  return {refine(la, sigma01()), refine(lc, sigma10())};
}

}  // namespace triet
