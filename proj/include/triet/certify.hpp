#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "triet/amicability.hpp"
#include "triet/errors.hpp"
#include "triet/iet.hpp"
#include "triet/morphism.hpp"
#include "triet/perron.hpp"
#include "triet/quadratic.hpp"

namespace triet {

enum class Clause {
  sturm,
  field_membership,
  conjugate_interval,
  left_interval,
  right_interval,
  quadratic_unit,
  eigen_equation,
  lattice_left,
  lattice_middle,
  unit_action,
};

inline const char* clause_name(Clause c) {
  switch (c) {
    case Clause::sturm: return "sturm";
    case Clause::field_membership: return "field_membership";
    case Clause::conjugate_interval: return "conjugate_interval";
    case Clause::left_interval: return "left_interval";
    case Clause::right_interval: return "right_interval";
    case Clause::quadratic_unit: return "quadratic_unit";
    case Clause::eigen_equation: return "eigen_equation";
    case Clause::lattice_left: return "lattice_left";
    case Clause::lattice_middle: return "lattice_middle";
    default: return "unit_action";
  }
}

/** Clause-by-clause outcome of a certification run, with the exact values
    each clause was decided on. The first failing clause is recorded. */
struct Certificate {
  bool verdict = true;
  std::optional<Clause> failed_clause;
  std::vector<std::pair<std::string, Quadratic>> witnesses;

  void require(Clause c, bool ok) {
    if (!ok && verdict) {
      verdict = false;
      failed_clause = c;
    }
  }
  void witness(std::string name, Quadratic value) {
    witnesses.emplace_back(std::move(name), std::move(value));
  }
};

/**
 * Membership test for slopes and intercepts of substitution-fixed Sturmian
 * words: alpha must be a Sturm number, beta must lie in Q(alpha), and the
 * conjugate of beta must lie between the conjugates of alpha and 1-alpha.
 * The interval clause is invariant under replacing beta' by 1-beta'; both
 * forms are evaluated as a self check.
 */
inline Certificate yasutomi_check(const Quadratic& alpha, const Quadratic& beta) {
  if (alpha.is_rational() || alpha.sign() <= 0 || alpha >= Quadratic(1))
    throw InvalidParameters("alpha must be irrational and inside (0,1)");
  if (beta.sign() < 0 || beta >= Quadratic(1))
    throw InvalidParameters("beta must lie in [0,1)");
  Certificate cert;
  Quadratic ac = alpha.conj();
  Quadratic lower = std::min(ac, Quadratic(1) - ac);
  Quadratic upper = std::max(ac, Quadratic(1) - ac);
  Quadratic bc = beta.conj();
  cert.witness("alpha_conj", ac);
  cert.witness("beta_conj", bc);
  cert.witness("lower", lower);
  cert.witness("upper", upper);
  cert.require(Clause::sturm, is_sturm_number(alpha));
  bool same_field = beta.is_rational() || beta.radicand() == alpha.radicand();
  cert.require(Clause::field_membership, same_field);
  if (same_field) {
    bool inside = lower <= bc && bc <= upper;
    Quadratic mirror = Quadratic(1) - bc;
    bool mirrored = lower <= mirror && mirror <= upper;
    if (inside != mirrored) throw Error("internal: interval test lost its symmetry");
    cert.require(Clause::conjugate_interval, inside);
  }
  return cert;
}

/**
 * Membership test for parameters of substitution-fixed exchange codings:
 * eps must be a Sturm number and the conjugates of -c and c+l must lie
 * between the conjugates of eps and 1-eps. Only non-degenerate parameters
 * (l outside Z[eps]) are certifiable.
 */
inline Certificate invariance_3iet_check(const IetParams& p) {
  if (!p.is_nondegenerate()) throw Degenerate("l lies in Z[eps]");
  Certificate cert;
  Quadratic ec = p.eps().conj();
  Quadratic lower = std::min(ec, Quadratic(1) - ec);
  Quadratic upper = std::max(ec, Quadratic(1) - ec);
  Quadratic neg_c = (-p.c()).conj();
  Quadratic c_plus_l = (p.c() + p.l()).conj();
  cert.witness("eps_conj", ec);
  cert.witness("neg_c_conj", neg_c);
  cert.witness("c_plus_l_conj", c_plus_l);
  cert.witness("lower", lower);
  cert.witness("upper", upper);
  cert.require(Clause::sturm, is_sturm_number(p.eps()));
  // c and l share eps's field by construction of IetParams.
  cert.require(Clause::field_membership, true);
  cert.require(Clause::left_interval, lower <= neg_c && neg_c <= upper);
  cert.require(Clause::right_interval, lower <= c_plus_l && c_plus_l <= upper);
  return cert;
}

struct CrossCheckResult {
  bool agree;
  Certificate direct;
  Certificate via_left;
  Certificate via_right;
};

/** The exchange certificate must agree with the two Sturmian certificates
    of the induced slopes and intercepts. */
inline CrossCheckResult cross_check(const IetParams& p) {
  CrossCheckResult r{false, invariance_3iet_check(p),
                     yasutomi_check(p.eps(), sturmian_params(p, SigmaVariant::v01).beta),
                     yasutomi_check(p.eps(), sturmian_params(p, SigmaVariant::v10).beta)};
  r.agree = r.direct.verdict == (r.via_left.verdict && r.via_right.verdict);
  return r;
}

/**
 * Necessary spectral conditions for a primitive ternary morphism to fix
 * the coding of an exchange with parameter eps: the dominant eigenvalue
 * is a unit, and (1-eps, 1-2eps, -eps) is a right eigenvector for its
 * conjugate. A mismatch of fields counts as a failed eigen clause.
 */
inline Certificate matrix_necessary_check(const TernaryMorphism& eta, const Quadratic& eps) {
  if (!is_primitive(eta)) throw NotPrimitive("morphism is not primitive");
  if (eps.is_rational() || eps.sign() <= 0 || eps >= Quadratic(1))
    throw InvalidParameters("eps must be irrational and inside (0,1)");
  PerronData pd = perron(eta);
  Certificate cert;
  std::vector<Quadratic> v{Quadratic(1) - eps, Quadratic(1) - eps - eps, -eps};
  cert.witness("lambda", pd.lambda);
  cert.witness("lambda_conj", pd.lambda_conj);
  cert.witness("v_A", v[0]);
  cert.witness("v_B", v[1]);
  cert.witness("v_C", v[2]);
  cert.require(Clause::quadratic_unit, is_quadratic_unit(pd.lambda));
  bool eigen = true;
  try {
    IntMatrix m = incidence(eta);
    for (std::size_t i = 0; i < 3 && eigen; ++i) {
      Quadratic s = 0;
      for (std::size_t j = 0; j < 3; ++j) s += Quadratic(Rational(m.at(i, j))) * v[j];
      eigen = s == pd.lambda_conj * v[i];
    }
  } catch (const MixedFields&) {
    eigen = false;
  }
  cert.require(Clause::eigen_equation, eigen);
  return cert;
}

/**
 * Lattice conditions tying the spectrum of eta to the orbit structure of
 * the exchange: the conjugate eigenvalue acts as a return scale, so it must
 * be positive, it must move the endpoints c and c+l-1+eps by elements of
 * Z[eps], and the eigenvalue must preserve Z[eps] itself.
 */
inline Certificate spectral_orbit_check(const TernaryMorphism& eta, const IetParams& p) {
  if (!is_primitive(eta)) throw NotPrimitive("morphism is not primitive");
  PerronData pd = perron(eta);
  if (pd.lambda_conj.sign() <= 0)
    throw ConjugateNotPositive("conjugate eigenvalue must be positive");
  const Quadratic& eps = p.eps();
  Quadratic delta_left = pd.lambda_conj * p.c() - p.c();
  Quadratic middle = p.c() + p.l() - Quadratic(1) + eps;
  Quadratic delta_middle = pd.lambda_conj * middle - middle;
  Certificate cert;
  cert.witness("lambda", pd.lambda);
  cert.witness("lambda_conj", pd.lambda_conj);
  cert.witness("delta_left", delta_left);
  cert.witness("delta_middle", delta_middle);
  cert.witness("lambda_eps", pd.lambda * eps);
  cert.require(Clause::lattice_left, in_z_basis(delta_left, eps));
  cert.require(Clause::lattice_middle, in_z_basis(delta_middle, eps));
  cert.require(Clause::unit_action,
               in_z_basis(pd.lambda * eps, eps) && in_z_basis(pd.lambda, eps));
  return cert;
}

/**
 * The exchange parameter a primitive ternary morphism could fix: the right
 * eigenvector w of the conjugate eigenvalue, scaled to w_A - w_C = 1, must
 * have the shape (1-eps, 1-2eps, -eps); returns eps = -w_C.
 */
inline Quadratic infer_epsilon(const TernaryMorphism& eta) {
  if (!is_primitive(eta)) throw NotPrimitive("morphism is not primitive");
  PerronData pd = perron(eta);
  std::vector<Quadratic> w = pd.eigvec_conj;
  Quadratic denom = w[0] - w[2];
  if (denom.sign() == 0)
    throw NotThreeIetCompatible("conjugate eigenvector cannot be scaled to w_A - w_C = 1");
  for (auto& x : w) x /= denom;
  if (w[1] != w[0] + w[2])
    throw NotThreeIetCompatible("conjugate eigenvector violates w_B = w_A + w_C");
  return -w[2];
}

/** Splitting of a ternary morphism through an amicable binary pair. */
struct Decomposition {
  unsigned power = 1;      // smallest k with eta^k = ternarization of the pair
  BinaryMorphism phi, psi;
  int lambda_conj_sign;    // sign of the conjugate dominant eigenvalue of eta
};

/**
 * Splits eta (or its square) as the ternarization of the amicable pair
 * read off the images of A and C. The candidate pair is accepted only if
 * the image of B is consistent with it and its ternarization reproduces
 * the power exactly.
 */
inline Decomposition decompose(const TernaryMorphism& eta) {
  if (!is_primitive(eta)) throw NotPrimitive("morphism is not primitive");
  Quadratic lambda_conj;
  try {
    lambda_conj = perron(eta).lambda_conj;
  } catch (const NotQuadratic& e) {
    throw NotDecomposable(std::string("dominant eigenvalue rules out a splitting: ") + e.what());
  }
  for (unsigned k = 1; k <= 2; ++k) {
    TernaryMorphism mu = power(eta, k);
    BinaryMorphism phi({sigma01()(mu.image(Ternary::A)), sigma01()(mu.image(Ternary::C))});
    BinaryMorphism psi({sigma10()(mu.image(Ternary::A)), sigma10()(mu.image(Ternary::C))});
    if (sigma01()(mu.image(Ternary::B)) != phi.image(0) + phi.image(1)) continue;
    if (sigma10()(mu.image(Ternary::B)) != psi.image(1) + psi.image(0)) continue;
    if (!is_amicable_morphisms(phi, psi)) continue;
    if (ternarize_morphisms(phi, psi) != mu) continue;
    return {k, phi, psi, lambda_conj.sign()};
  }
  throw NotDecomposable("neither the morphism nor its square splits through an amicable pair");
}

}  // namespace triet
