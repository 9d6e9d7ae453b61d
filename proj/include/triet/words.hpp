#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "triet/errors.hpp"

namespace triet {

using Letter = std::uint8_t;

/** Two letter alphabet {0, 1}. */
struct Binary {
  static constexpr std::size_t size = 2;
  static constexpr std::array<char, 2> names{'0', '1'};
  enum : Letter { Zero = 0, One = 1 };
};

/** Three letter alphabet {A, B, C}. */
struct Ternary {
  static constexpr std::size_t size = 3;
  static constexpr std::array<char, 3> names{'A', 'B', 'C'};
  enum : Letter { A = 0, B = 1, C = 2 };
};

template <class A>
constexpr int letter_index(char c) {
  for (std::size_t i = 0; i < A::size; ++i)
    if (A::names[i] == c) return static_cast<int>(i);
  return -1;
}

/** Finite word over a fixed alphabet; letters are stored as indices. */
template <class A>
class Word {
 public:
  using Alphabet = A;

  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word single(Letter a) { return Word(std::vector<Letter>{a}); }

  static Word from_string(std::string_view s) {
    Word w;
    w.letters_.reserve(s.size());
    for (char c : s) {
      int i = letter_index<A>(c);
      if (i < 0) throw ParseError(std::string("letter '") + c + "' is not in the alphabet");
      w.letters_.push_back(static_cast<Letter>(i));
    }
    return w;
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  void push_back(Letter a) { letters_.push_back(a); }

  Word& operator+=(const Word& w) {
    letters_.insert(letters_.end(), w.letters_.begin(), w.letters_.end());
    return *this;
  }
  friend Word operator+(Word x, const Word& y) { return x += y; }

  Word prefix(std::size_t n) const {
    n = std::min(n, size());
    return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
  }

  Word subword(std::size_t pos, std::size_t n) const {
    return Word(std::vector<Letter>(letters_.begin() + pos, letters_.begin() + pos + n));
  }

  std::string str() const {
    std::string s;
    s.reserve(size());
    for (Letter a : letters_) s.push_back(A::names[a]);
    return s;
  }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& data() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& x, const Word& y) {
    return std::lexicographical_compare_three_way(x.letters_.begin(), x.letters_.end(),
                                                  y.letters_.begin(), y.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
};

/**
 * Pointed window u_{-m} ... u_{-1} | u_0 ... u_n of a bi-infinite word.
 * The right part is never empty; rendering omits the bar when the left
 * part is empty, so origin-based windows read as plain words.
 */
template <class A>
class BiWindow {
 public:
  using Alphabet = A;

  BiWindow(const Word<A>& left, const Word<A>& right)
      : all_(left + right), origin_(left.size()) {
    if (right.empty()) throw InvalidParameters("window must contain the letter at index 0");
  }

  static BiWindow from_string(std::string_view s) {
    auto bar = s.find('|');
    if (bar == std::string_view::npos) return BiWindow(Word<A>(), Word<A>::from_string(s));
    if (s.find('|', bar + 1) != std::string_view::npos)
      throw ParseError("window literal has more than one '|'");
    return BiWindow(Word<A>::from_string(s.substr(0, bar)),
                    Word<A>::from_string(s.substr(bar + 1)));
  }

  const Word<A>& whole() const { return all_; }
  std::size_t origin() const { return origin_; }

  Word<A> left() const { return all_.prefix(origin_); }
  Word<A> right() const { return all_.subword(origin_, all_.size() - origin_); }

  long from() const { return -static_cast<long>(origin_); }
  long to() const { return static_cast<long>(all_.size() - origin_) - 1; }

  /** Letter u_k for from() <= k <= to(). */
  Letter at(long k) const {
    long i = k + static_cast<long>(origin_);
    if (i < 0 || i >= static_cast<long>(all_.size()))
      throw InvalidParameters("index outside window");
    return all_[static_cast<std::size_t>(i)];
  }

  std::string str() const {
    if (origin_ == 0) return all_.str();
    return left().str() + "|" + right().str();
  }

  friend bool operator==(const BiWindow&, const BiWindow&) = default;

 private:
  Word<A> all_;
  std::size_t origin_;
};

/** All distinct factors of length n, by naive sliding window. */
template <class A>
std::set<Word<A>> factors(const Word<A>& w, std::size_t n) {
  std::set<Word<A>> out;
  if (n == 0 || n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.subword(i, n));
  return out;
}

/**
 * Factor counts C(1), ..., C(n_max). Counts are only meaningful for windows
 * much longer than n_max; see the complexity notes in the README (the tools
 * default to windows of at least 200 times n_max).
 */
template <class A>
std::vector<std::size_t> complexity_profile(const Word<A>& w, std::size_t n_max) {
  if (n_max == 0 || n_max > w.size())
    throw InvalidParameters("complexity window shorter than requested factor length");
  std::string s = w.str();
  std::vector<std::size_t> profile;
  profile.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i + n <= s.size(); ++i) seen.insert(s.substr(i, n));
    profile.push_back(seen.size());
  }
  return profile;
}

template <class A>
std::vector<std::size_t> complexity_profile(const BiWindow<A>& w, std::size_t n_max) {
  return complexity_profile(w.whole(), n_max);
}

enum class ComplexityClass { sturmian_consistent, threeiet_consistent, other };

inline const char* to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::sturmian_consistent: return "sturmian_consistent";
    case ComplexityClass::threeiet_consistent: return "threeiet_consistent";
    default: return "other";
  }
}

/** Matches a measured profile against C(n) = n + 1 and C(n) = 2n + 1. */
inline ComplexityClass classify_profile(const std::vector<std::size_t>& profile) {
  if (profile.empty()) return ComplexityClass::other;
  bool sturm = true, threeiet = true;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    std::size_t n = i + 1;
    sturm = sturm && profile[i] == n + 1;
    threeiet = threeiet && profile[i] == 2 * n + 1;
  }
  if (sturm) return ComplexityClass::sturmian_consistent;
  if (threeiet) return ComplexityClass::threeiet_consistent;
  return ComplexityClass::other;
}

}  // namespace triet
