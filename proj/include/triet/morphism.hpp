#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "triet/errors.hpp"
#include "triet/matrix.hpp"
#include "triet/words.hpp"

namespace triet {

/** Non-erasing morphism between the free monoids over S and D. */
template <class S, class D = S>
class Morphism {
 public:
  using Source = S;
  using Target = D;

  explicit Morphism(std::array<Word<D>, S::size> images) : images_(std::move(images)) {
    for (const auto& w : images_)
      if (w.empty()) throw InvalidParameters("morphism images must be non-empty");
  }

  /** Literal "A:ACA,B:BAB,C:B"; every source letter exactly once. */
  static Morphism from_string(std::string_view s) {
    std::array<Word<D>, S::size> images;
    std::array<bool, S::size> seen{};
    std::size_t pos = 0;
    while (true) {
      auto comma = s.find(',', pos);
      std::string_view item =
          comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
      auto colon = item.find(':');
      if (colon != 1) throw ParseError("expected \"<letter>:<image>\" in morphism literal");
      int a = letter_index<S>(item[0]);
      if (a < 0) throw ParseError(std::string("letter '") + item[0] + "' is not in the alphabet");
      if (seen[a]) throw ParseError("duplicate image in morphism literal");
      seen[a] = true;
      images[a] = Word<D>::from_string(item.substr(2));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    for (std::size_t a = 0; a < S::size; ++a)
      if (!seen[a])
        throw ParseError(std::string("missing image for letter '") + S::names[a] + "'");
    return Morphism(std::move(images));
  }

  const Word<D>& image(Letter a) const { return images_[a]; }

  Word<D> operator()(const Word<S>& w) const {
    Word<D> out;
    for (Letter a : w) out += images_[a];
    return out;
  }

  /** Pointed application: the image of u_0 starts at index 0. */
  BiWindow<D> operator()(const BiWindow<S>& w) const {
    return BiWindow<D>((*this)(w.left()), (*this)(w.right()));
  }

  std::string str() const {
    std::string s;
    for (std::size_t a = 0; a < S::size; ++a) {
      if (a) s += ",";
      s += S::names[a];
      s += ":";
      s += images_[a].str();
    }
    return s;
  }

  friend bool operator==(const Morphism&, const Morphism&) = default;

 private:
  std::array<Word<D>, S::size> images_;
};

/** compose(outer, inner) maps a to outer(inner(a)). */
template <class A, class B, class C>
Morphism<A, C> compose(const Morphism<B, C>& outer, const Morphism<A, B>& inner) {
  std::array<Word<C>, A::size> images;
  for (std::size_t a = 0; a < A::size; ++a) images[a] = outer(inner.image(static_cast<Letter>(a)));
  return Morphism<A, C>(std::move(images));
}

template <class A>
Morphism<A, A> power(const Morphism<A, A>& m, unsigned k) {
  if (k == 0) throw InvalidParameters("morphism power must be at least 1");
  Morphism<A, A> r = m;
  for (unsigned i = 1; i < k; ++i) r = compose(r, m);
  return r;
}

/** Incidence matrix: entry (a, b) counts the letter b in the image of a. */
template <class S, class D>
IntMatrix incidence(const Morphism<S, D>& m) {
  IntMatrix mat(S::size, D::size);
  for (std::size_t a = 0; a < S::size; ++a)
    for (Letter b : m.image(static_cast<Letter>(a))) ++mat.at(a, b);
  return mat;
}

/** Primitivity via the Wielandt exponent bound n^2 - 2n + 2. */
template <class A>
bool is_primitive(const Morphism<A, A>& m) {
  const std::size_t n = A::size;
  const unsigned bound = static_cast<unsigned>(n * n - 2 * n + 2);
  IntMatrix mat = incidence(m);
  IntMatrix acc = mat;
  for (unsigned k = 1; k <= bound; ++k) {
    if (acc.all_positive()) return true;
    acc = acc * mat;
  }
  return false;
}

/**
 * Prefix of length len of the fixed point seeded at a letter a with
 * m(a) = a... . Without an explicit seed the alphabetically first such
 * letter is used. The morphism must be primitive.
 */
template <class A>
Word<A> fixed_point_prefix(const Morphism<A, A>& m, std::size_t len,
                           std::optional<Letter> seed = std::nullopt) {
  if (!is_primitive(m)) throw NotPrimitive("morphism is not primitive");
  auto extends = [&](Letter a) { return m.image(a)[0] == a && m.image(a).size() >= 2; };
  Letter s;
  if (seed) {
    s = *seed;
    if (s >= A::size || !extends(s))
      throw InvalidSeed("image of the seed must start with the seed and grow");
  } else {
    std::size_t a = 0;
    while (a < A::size && !extends(static_cast<Letter>(a))) ++a;
    if (a == A::size) throw NoFixedPoint("no image starts with its own letter");
    s = static_cast<Letter>(a);
  }
  Word<A> w = Word<A>::single(s);
  while (w.size() < len) {
    std::size_t before = w.size();
    w = m(w);
    if (w.size() == before) throw NoFixedPoint("iteration does not grow");
  }
  return w.prefix(len);
}

// Fixed morphisms used throughout: the projections collapsing B to a two
// letter block, and the elementary Sturmian morphisms.

inline const Morphism<Ternary, Binary>& sigma01() {
  static const auto m = Morphism<Ternary, Binary>::from_string("A:0,B:01,C:1");
  return m;
}

inline const Morphism<Ternary, Binary>& sigma10() {
  static const auto m = Morphism<Ternary, Binary>::from_string("A:0,B:10,C:1");
  return m;
}

inline const Morphism<Binary, Binary>& sturmian_phi() {
  static const auto m = Morphism<Binary, Binary>::from_string("0:01,1:0");
  return m;
}

inline const Morphism<Binary, Binary>& sturmian_psi() {
  static const auto m = Morphism<Binary, Binary>::from_string("0:10,1:0");
  return m;
}

inline const Morphism<Binary, Binary>& letter_exchange() {
  static const auto m = Morphism<Binary, Binary>::from_string("0:1,1:0");
  return m;
}

}  // namespace triet
