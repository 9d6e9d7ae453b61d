#pragma once

#include <vector>

#include "triet/errors.hpp"
#include "triet/matrix.hpp"
#include "triet/morphism.hpp"
#include "triet/quadratic.hpp"

namespace triet {

/**
 * Exact spectral data of a 2x2 or 3x3 incidence matrix whose dominant
 * eigenvalue is a quadratic irrational: the eigenvalue, its field
 * conjugate, and right eigenvectors for both, normalized so that the
 * first non-zero entry is 1. M v = lambda v holds exactly.
 */
struct PerronData {
  std::vector<BigInt> charpoly;  // monic, ascending powers
  Quadratic lambda;
  Quadratic lambda_conj;
  std::vector<Quadratic> eigvec;
  std::vector<Quadratic> eigvec_conj;
};

namespace detail {

inline bool perfect_square(const BigInt& v, BigInt& root) {
  if (v < 0) return false;
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

inline std::vector<BigInt> charpoly_of(const IntMatrix& m) {
  if (m.rows() == 2) {
    BigInt tr = m.at(0, 0) + m.at(1, 1);
    BigInt det = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    return {det, -tr, 1};
  }
  BigInt tr = m.at(0, 0) + m.at(1, 1) + m.at(2, 2);
  BigInt m2 = m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0) +
              m.at(0, 0) * m.at(2, 2) - m.at(0, 2) * m.at(2, 0) +
              m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1);
  BigInt det = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  return {-det, m2, -tr, 1};
}

inline BigInt eval_poly(const std::vector<BigInt>& p, const BigInt& x) {
  BigInt v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

/** Some integer root of a monic integer polynomial, if one exists. */
inline bool integer_root(const std::vector<BigInt>& p, BigInt& root) {
  const BigInt& c0 = p[0];
  if (c0 == 0) {
    root = 0;
    return true;
  }
  BigInt a = abs(c0);
  for (BigInt d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    BigInt q = a / d;
    for (const BigInt& cand : {d, BigInt(-d), q, BigInt(-q)}) {
      if (eval_poly(p, cand) == 0) {
        root = cand;
        return true;
      }
    }
  }
  return false;
}

/** Roots of x^2 + c1 x + c0 when they are conjugate quadratic irrationals. */
inline Quadratic quadratic_root(const BigInt& c1, const BigInt& c0) {
  BigInt disc = c1 * c1 - 4 * c0;
  BigInt r;
  if (disc <= 0) throw NotQuadratic("eigenvalues of the quadratic factor are not real");
  if (perfect_square(disc, r)) throw NotQuadratic("dominant eigenvalue is rational");
  return Quadratic::make(Rational(-c1, 2), Rational(1, 2), disc);
}

inline std::vector<Quadratic> eigenvector(const IntMatrix& m, const Quadratic& lambda) {
  const std::size_t n = m.rows();
  auto entry = [&](std::size_t i, std::size_t j) -> Quadratic {
    Quadratic v = Rational(m.at(i, j));
    return i == j ? v - lambda : v;
  };
  auto verify = [&](const std::vector<Quadratic>& v) {
    bool nonzero = false;
    for (const auto& x : v) nonzero = nonzero || x.sign() != 0;
    if (!nonzero) return false;
    for (std::size_t i = 0; i < n; ++i) {
      Quadratic s = 0;
      for (std::size_t j = 0; j < n; ++j) s += Quadratic(Rational(m.at(i, j))) * v[j];
      if (s != lambda * v[i]) return false;
    }
    return true;
  };
  std::vector<std::vector<Quadratic>> candidates;
  if (n == 2) {
    candidates.push_back({Quadratic(Rational(m.at(0, 1))), lambda - Rational(m.at(0, 0))});
    candidates.push_back({lambda - Rational(m.at(1, 1)), Quadratic(Rational(m.at(1, 0)))});
  } else {
    auto cross = [&](std::size_t r, std::size_t s) {
      return std::vector<Quadratic>{entry(r, 1) * entry(s, 2) - entry(r, 2) * entry(s, 1),
                                    entry(r, 2) * entry(s, 0) - entry(r, 0) * entry(s, 2),
                                    entry(r, 0) * entry(s, 1) - entry(r, 1) * entry(s, 0)};
    };
    candidates.push_back(cross(0, 1));
    candidates.push_back(cross(0, 2));
    candidates.push_back(cross(1, 2));
  }
  for (auto& v : candidates) {
    if (!verify(v)) continue;
    std::size_t first = 0;
    while (v[first].sign() == 0) ++first;
    Quadratic scale = v[first];
    for (auto& x : v) x /= scale;
    return v;
  }
  throw Error("internal: eigenvector solve failed");
}

}  // namespace detail

/** Spectral data of an incidence matrix; NotQuadratic when the dominant
    eigenvalue is rational, complex, or of degree three. */
inline PerronData perron_of_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 3))
    throw InvalidParameters("spectral data requires a square matrix of size 2 or 3");
  std::vector<BigInt> cp = detail::charpoly_of(m);
  Quadratic lambda;
  if (m.rows() == 2) {
    lambda = detail::quadratic_root(cp[1], cp[0]);
    // Strict dominance over the conjugate root: lambda + conj > 0.
    if (-cp[1] <= 0) throw NotQuadratic("no strictly dominant quadratic eigenvalue");
  } else {
    BigInt r;
    if (!detail::integer_root(cp, r)) throw NotQuadratic("dominant eigenvalue has degree three");
    // Deflate by (x - r).
    BigInt b = cp[2] + r;
    BigInt c = cp[1] + r * b;
    lambda = detail::quadratic_root(b, c);
    if (lambda <= abs(lambda.conj()) || lambda <= Quadratic(Rational(abs(r))))
      throw NotQuadratic("dominant eigenvalue is rational");
  }
  if (lambda.sign() <= 0) throw NotQuadratic("dominant eigenvalue is not positive");
  PerronData out;
  out.charpoly = std::move(cp);
  out.lambda = lambda;
  out.lambda_conj = lambda.conj();
  out.eigvec = detail::eigenvector(m, lambda);
  out.eigvec_conj.reserve(out.eigvec.size());
  // Conjugating an exact eigen relation for lambda yields one for its
  // conjugate, the matrix being rational.
  for (const auto& x : out.eigvec) out.eigvec_conj.push_back(x.conj());
  return out;
}

template <class A>
PerronData perron(const Morphism<A, A>& m) {
  return perron_of_matrix(incidence(m));
}

}  // namespace triet
