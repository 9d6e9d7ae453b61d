// End to end tour of the toolkit on one worked parameter triple.
//
// The exchange with eps = (3-sqrt(5))/2, l = 1/2+sqrt(5)/10, c = -1/3
// codes the orbit of 0 into a ternary word that is also the fixed point
// of a substitution; the demo walks from the parameters to the coding,
// through the certificates, down to the substitution and its geometry.

#include <iostream>
#include <string>

#include "triet/triet.hpp"

using namespace triet;

namespace {

void section(const std::string& title) { std::cout << "\n== " << title << " ==\n"; }

void show(const std::string& name, const Quadratic& q) {
  std::cout << "  " << name << " = " << q.str() << " (~ " << approx_str(q) << ")\n";
}

}  // namespace

int main() {
  IetParams p(parse_quadratic("3/2-1/2*sqrt(5)"), parse_quadratic("1/2+1/10*sqrt(5)"),
              parse_quadratic("-1/3"));

  section("parameters");
  show("eps", p.eps());
  show("l", p.l());
  show("c", p.c());

  section("coding the orbit of 0");
  std::cout << "  window  " << p.code(-20, 20).str() << "\n";
  auto profile = complexity_profile(p.code(-400, 400), 6);
  std::cout << "  factor counts ";
  for (std::size_t n : profile) std::cout << n << " ";
  std::cout << "(" << to_string(classify_profile(profile)) << ")\n";

  section("the two binary readings");
  SturmianParams s01 = sturmian_params(p, SigmaVariant::v01);
  SturmianParams s10 = sturmian_params(p, SigmaVariant::v10);
  auto u = two_iet_code(s01, 0, 14), v = two_iet_code(s10, 0, 14);
  std::cout << "  under 01  " << u.str() << "\n";
  std::cout << "  under 10  " << v.str() << "\n";
  std::cout << "  parsed back  " << ternarize_words(u.right(), v.right()).str() << "\n";

  section("parameter certificate");
  Certificate cert = invariance_3iet_check(p);
  std::cout << "  verdict " << (cert.verdict ? "true" : "false") << "\n";
  for (const auto& [name, w] : cert.witnesses) show(name, w);

  section("the substitution fixing the coding");
  auto phi = BinaryMorphism::from_string("0:01,1:101");
  auto psi = BinaryMorphism::from_string("0:10,1:101");
  TernaryMorphism eta = ternarize_morphisms(phi, psi);
  std::cout << "  eta = " << eta.str() << "\n";
  std::cout << "  fixed point  " << fixed_point_prefix(eta, 20).str() << "\n";
  PerronData spec = perron(eta);
  show("lambda", spec.lambda);
  show("lambda'", spec.lambda_conj);

  section("splitting eta back through binary morphisms");
  Decomposition d = decompose(eta);
  std::cout << "  power " << d.power << ", phi = " << d.phi.str()
            << ", psi = " << d.psi.str() << ", sign "
            << (d.lambda_conj_sign > 0 ? "+1" : "-1") << "\n";
  show("inferred eps", infer_epsilon(eta));
  std::cout << "  matches the exchange parameter: "
            << (infer_epsilon(eta) == p.eps() ? "yes" : "no") << "\n";

  section("geometry of the fixed point");
  LengthAssignment<Ternary> lengths = lengths_from_perron(eta);
  for (std::size_t a = 0; a < 3; ++a)
    show(std::string("len(") + Ternary::names[a] + ")",
         lengths.of(static_cast<Letter>(a)));
  GeoRep<Ternary> rep = build_rep(fixed_point_prefix(eta, 300), lengths);
  check_selfsimilar(rep, spec.lambda);
  std::cout << "  scaling by lambda maps the point set into itself\n";
  TernaryMorphism recovered = substitution_from_geometry(rep, spec.lambda);
  std::cout << "  substitution read off the geometry: " << recovered.str()
            << (recovered == eta ? "  (same eta)" : "") << "\n";

  SturmianReps reps = sturmian_insertions(rep);
  std::cout << "  refined drawings recover phi and psi: "
            << (substitution_from_geometry(reps.rep01, spec.lambda) == d.phi &&
                        substitution_from_geometry(reps.rep10, spec.lambda) == d.psi
                    ? "yes"
                    : "no")
            << "\n";
  return 0;
}
