#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "triet/parse.hpp"
#include "triet/quadratic.hpp"

using namespace triet;
using testutil::Rng;

namespace {
const Quadratic eps_golden = Quadratic::make(Rational(3, 2), Rational(-1, 2), 5);  // (3-sqrt5)/2
const Quadratic lambda_golden = Quadratic::make(Rational(3, 2), Rational(1, 2), 5);
}  // namespace

TEST_CASE("construction canonicalizes the radicand") {
  Quadratic x = Quadratic::make(Rational(1, 2), Rational(-1, 4), 8);
  CHECK(x.a() == Rational(1, 2));
  CHECK(x.b() == Rational(-1, 2));
  CHECK(x.radicand() == 2);

  // A square radicand collapses to a rational value.
  Quadratic y = Quadratic::make(Rational(1), Rational(1, 3), 9);
  CHECK(y.is_rational());
  CHECK(y.a() == Rational(2));

  Quadratic z = Quadratic::make(Rational(0), Rational(2), 45);  // 2*sqrt(45) = 6*sqrt(5)
  CHECK(z.b() == Rational(6));
  CHECK(z.radicand() == 5);

  CHECK_THROWS_AS(Quadratic::make(Rational(1), Rational(1), 0), InvalidParameters);
  CHECK_THROWS_AS(Quadratic::make(Rational(1), Rational(1), -3), InvalidParameters);
}

TEST_CASE("sign is decided exactly in hard cases") {
  Quadratic x = Quadratic::make(Rational(3), Rational(-2), 2);  // 3 - 2 sqrt 2 > 0
  CHECK(x.sign() == 1);
  Quadratic y = Quadratic::make(Rational(-3), Rational(2), 2);
  CHECK(y.sign() == -1);
  // 1393/985 is a convergent of sqrt(2) from below; the difference is about
  // 4e-7 and must still come out negative.
  Quadratic close = Quadratic::make(Rational(1393, 985), Rational(-1), 2);
  CHECK(close.sign() == -1);
  Quadratic close_above = Quadratic::make(Rational(99, 70), Rational(-1), 2);
  CHECK(close_above.sign() == 1);
  CHECK(Quadratic(Rational(0)).sign() == 0);
  CHECK(eps_golden.sign() == 1);
}

TEST_CASE("sign agrees with a 100 digit decimal oracle on random values") {
  Rng rng(20240517);
  for (int i = 0; i < 2000; ++i) {
    Quadratic x = testutil::rand_quadratic(rng, testutil::rand_radicand(rng));
    CHECK(x.sign() == testutil::decimal_sign(x));
  }
}

TEST_CASE("field axioms hold on random triples") {
  Rng rng(97);
  for (int i = 0; i < 300; ++i) {
    BigInt d = testutil::rand_radicand(rng);
    Quadratic x = testutil::rand_quadratic(rng, d);
    Quadratic y = testutil::rand_quadratic(rng, d);
    Quadratic z = testutil::rand_quadratic(rng, d);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    CHECK(x * y == y * x);
    CHECK(x - x == Quadratic(0));
    if (y.sign() != 0) CHECK(x / y * y == x);
  }
}

TEST_CASE("conjugation is a field automorphism") {
  Rng rng(98);
  for (int i = 0; i < 300; ++i) {
    BigInt d = testutil::rand_radicand(rng);
    Quadratic x = testutil::rand_quadratic(rng, d);
    Quadratic y = testutil::rand_quadratic(rng, d);
    CHECK((x + y).conj() == x.conj() + y.conj());
    CHECK((x * y).conj() == x.conj() * y.conj());
    CHECK(x.conj().conj() == x);
  }
  CHECK(eps_golden.conj() == lambda_golden);
}

TEST_CASE("mixed field operations are rejected") {
  Quadratic r2 = Quadratic::make(Rational(0), Rational(1), 2);
  Quadratic r3 = Quadratic::make(Rational(0), Rational(1), 3);
  CHECK_THROWS_AS(r2 + r3, MixedFields);
  CHECK_THROWS_AS(r2 * r3, MixedFields);
  CHECK(r2 != r3);               // equality across fields is false, not an error
  CHECK(r2 + Quadratic(1) == Quadratic::make(Rational(1), Rational(1), 2));
  CHECK(r2 * r2 == Quadratic(2));  // the product drops back into the rationals
  CHECK((r2 * r2).is_rational());
}

TEST_CASE("division matches known inverses and rejects zero") {
  Quadratic one_plus_r2 = Quadratic::make(Rational(1), Rational(1), 2);
  Quadratic r2_minus_1 = Quadratic::make(Rational(-1), Rational(1), 2);
  CHECK(Quadratic(1) / one_plus_r2 == r2_minus_1);
  CHECK_THROWS_AS(one_plus_r2 / Quadratic(0), DivisionByZero);
}

TEST_CASE("floor on integers, rationals and irrationals") {
  CHECK(Quadratic(Rational(7, 2)).floor() == 3);
  CHECK(Quadratic(Rational(-7, 2)).floor() == -4);
  CHECK(Quadratic(Rational(4)).floor() == 4);
  Quadratic golden = Quadratic::make(Rational(1, 2), Rational(1, 2), 5);
  CHECK(golden.floor() == 1);
  CHECK((-golden).floor() == -2);
  CHECK(eps_golden.floor() == 0);

  Rng rng(99);
  for (int i = 0; i < 300; ++i) {
    Quadratic x = testutil::rand_quadratic(rng, testutil::rand_radicand(rng));
    BigInt n = x.floor();
    CHECK((x - Quadratic(Rational(n))).sign() >= 0);
    CHECK((x - Quadratic(Rational(n + 1))).sign() < 0);
  }
}

TEST_CASE("coordinates in the basis (1, eps)") {
  Quadratic l = Quadratic::make(Rational(1, 2), Rational(1, 10), 5);
  auto [s, t] = coords_in_basis(l, eps_golden);
  CHECK(s == Rational(4, 5));
  CHECK(t == Rational(-1, 5));
  CHECK(Quadratic(s) + Quadratic(t) * eps_golden == l);

  // lambda * eps = 1 and lambda = 3 - eps in this field.
  CHECK(in_z_basis(lambda_golden * eps_golden, eps_golden));
  CHECK(in_z_basis(lambda_golden, eps_golden));
  auto [ls, lt] = coords_in_basis(lambda_golden, eps_golden);
  CHECK(ls == Rational(3));
  CHECK(lt == Rational(-1));
  CHECK_FALSE(in_z_basis(l, eps_golden));

  CHECK_THROWS_AS(coords_in_basis(l, Quadratic(Rational(1, 2))), RationalBase);
  Quadratic r2 = Quadratic::make(Rational(0), Rational(1), 2);
  CHECK_THROWS_AS(coords_in_basis(r2, eps_golden), MixedFields);

  Rng rng(100);
  for (int i = 0; i < 300; ++i) {
    Quadratic x = testutil::rand_quadratic(rng, 5);
    auto [u, v] = coords_in_basis(x, eps_golden);
    CHECK(Quadratic(u) + Quadratic(v) * eps_golden == x);
  }
}

TEST_CASE("Sturm number test") {
  CHECK(is_sturm_number(eps_golden));
  Quadratic inv_golden = Quadratic::make(Rational(-1, 2), Rational(1, 2), 5);  // (sqrt5-1)/2
  CHECK(is_sturm_number(inv_golden));
  // 1/2 + sqrt(5)/10 lies in (0,1) but so does its conjugate.
  CHECK_FALSE(is_sturm_number(Quadratic::make(Rational(1, 2), Rational(1, 10), 5)));
  CHECK_FALSE(is_sturm_number(Quadratic(Rational(1, 2))));
  CHECK_FALSE(is_sturm_number(Quadratic::make(Rational(3, 2), Rational(1, 2), 5)));  // > 1
}

TEST_CASE("minimal polynomials") {
  MinimalPolynomial p = minimal_polynomial(lambda_golden);
  CHECK(p.degree == 2);
  CHECK(p.c1 == Rational(-3));
  CHECK(p.c0 == Rational(1));
  CHECK(p.str() == "x^2 - 3*x + 1");

  MinimalPolynomial q = minimal_polynomial(Quadratic(Rational(3, 2)));
  CHECK(q.degree == 1);
  CHECK(q.c0 == Rational(-3, 2));

  // The minimal polynomial annihilates its argument.
  Rng rng(101);
  for (int i = 0; i < 200; ++i) {
    Quadratic x = testutil::rand_quadratic(rng, testutil::rand_radicand(rng));
    MinimalPolynomial m = minimal_polynomial(x);
    if (m.degree == 2)
      CHECK(x * x + Quadratic(m.c1) * x + Quadratic(m.c0) == Quadratic(0));
    else
      CHECK(x + Quadratic(m.c0) == Quadratic(0));
  }
}

TEST_CASE("quadratic unit detection") {
  CHECK(is_quadratic_unit(lambda_golden));
  CHECK(is_quadratic_unit(eps_golden));
  CHECK(is_quadratic_unit(Quadratic::make(Rational(1, 2), Rational(1, 2), 5)));  // norm -1
  CHECK_FALSE(is_quadratic_unit(Quadratic::make(Rational(2), Rational(1), 2)));  // norm 2
  CHECK_FALSE(is_quadratic_unit(Quadratic::make(Rational(0), Rational(1), 5)));  // norm -5
  CHECK_FALSE(is_quadratic_unit(Quadratic(Rational(1))));
  // Half-integer trace is not integral.
  CHECK_FALSE(is_quadratic_unit(Quadratic::make(Rational(1, 4), Rational(1, 4), 5)));
}

TEST_CASE("unit multiplication preserves integer coordinates") {
  // With lambda*1 and lambda*eps in Z[eps], linearity puts lambda*(m+n eps)
  // in Z[eps] for all integers m, n.
  Rng rng(102);
  std::uniform_int_distribution<long> nd(-50, 50);
  for (int i = 0; i < 200; ++i) {
    Quadratic x = Quadratic(Rational(nd(rng))) + Quadratic(Rational(nd(rng))) * eps_golden;
    CHECK(in_z_basis(lambda_golden * x, eps_golden));
  }
}

TEST_CASE("literal grammar round trips") {
  CHECK(parse_quadratic("3/2-1/2*sqrt(5)") == eps_golden);
  CHECK(parse_quadratic("-1/3") == Quadratic(Rational(-1, 3)));
  CHECK(parse_quadratic("7") == Quadratic(7));
  CHECK(parse_quadratic("0+1*sqrt(2)") == Quadratic::make(Rational(0), Rational(1), 2));
  CHECK(parse_quadratic("1+2*sqrt(12)") == Quadratic::make(Rational(1), Rational(4), 3));
  CHECK(parse_rational("-22/7") == Rational(-22, 7));

  CHECK(eps_golden.str() == "3/2-1/2*sqrt(5)");
  CHECK(Quadratic(Rational(-1, 3)).str() == "-1/3");
  CHECK(Quadratic::make(Rational(0), Rational(1), 2).str() == "0+1*sqrt(2)");

  Rng rng(103);
  for (int i = 0; i < 300; ++i) {
    Quadratic x = testutil::rand_quadratic(rng, testutil::rand_radicand(rng));
    CHECK(parse_quadratic(x.str()) == x);
  }

  CHECK_THROWS_AS(parse_quadratic("3/0"), ParseError);
  CHECK_THROWS_AS(parse_quadratic("sqrt(5)"), ParseError);
  CHECK_THROWS_AS(parse_quadratic("1+2*sqrt(0)"), ParseError);
  CHECK_THROWS_AS(parse_quadratic("1+2*sqrt(-4)"), ParseError);
  CHECK_THROWS_AS(parse_quadratic("1of2"), ParseError);
  CHECK_THROWS_AS(parse_quadratic(""), ParseError);
  CHECK_THROWS_AS(parse_quadratic("1/2+1/3*sqrt(5)junk"), ParseError);
}

TEST_CASE("decimal rendering is display only but correct") {
  CHECK(approx_str(Quadratic(Rational(1, 2))) == "0.5");
  std::string g = approx_str(lambda_golden);
  CHECK(g.substr(0, 7) == "2.61803");
}
