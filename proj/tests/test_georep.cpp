#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "helpers.hpp"
#include "triet/certify.hpp"
#include "triet/georep.hpp"

using namespace triet;

namespace {

TernaryMorphism ter_m(const char* s) { return TernaryMorphism::from_string(s); }
BinaryMorphism bin_m(const char* s) { return BinaryMorphism::from_string(s); }

const TernaryMorphism& worked_eta() {
  static const auto eta = ter_m("A:B,B:BCB,C:CAC");
  return eta;
}

GeoRep<Ternary> worked_rep(std::size_t len) {
  return build_rep(fixed_point_prefix(worked_eta(), len), lengths_from_perron(worked_eta()));
}

}  // namespace

TEST_CASE("length assignments") {
  Quadratic golden = Quadratic::make(Rational(1, 2), Rational(1, 2), 5);
  CHECK_NOTHROW(LengthAssignment<Binary>({Quadratic(1), golden}));
  CHECK_THROWS_AS(LengthAssignment<Binary>({Quadratic(0), golden}), InvalidParameters);
  CHECK_THROWS_AS(LengthAssignment<Binary>({Quadratic(-1), golden}), InvalidParameters);
  CHECK_THROWS_AS(LengthAssignment<Binary>({golden, golden}), InvalidParameters);
}

TEST_CASE("letter lengths from the dominant eigenvector") {
  LengthAssignment<Ternary> len = lengths_from_perron(worked_eta());
  CHECK(len.of(Ternary::A).str() == "1");
  CHECK(len.of(Ternary::B).str() == "3/2+1/2*sqrt(5)");
  CHECK(len.of(Ternary::C).str() == "1/2+1/2*sqrt(5)");
  CHECK(len.of(Ternary::B) == len.of(Ternary::A) + len.of(Ternary::C));

  LengthAssignment<Ternary> sq = lengths_from_perron(ter_m("A:ACA,B:BAB,C:B"));
  CHECK(sq.of(Ternary::A).str() == "1");
  CHECK(sq.of(Ternary::B).str() == "1/2+1/2*sqrt(5)");
  CHECK(sq.of(Ternary::C).str() == "-1/2+1/2*sqrt(5)");
  CHECK(sq.of(Ternary::B) == sq.of(Ternary::A) + sq.of(Ternary::C));

  CHECK_THROWS_AS(lengths_from_perron(ter_m("A:AB,B:B,C:CB")), NotPrimitive);
  CHECK_THROWS_AS(lengths_from_perron(ter_m("A:AAB,B:BC,C:CA")), NotQuadratic);
}

TEST_CASE("drawing a word on the half line") {
  GeoRep<Ternary> rep = build_rep(Word<Ternary>::from_string("BCB"),
                                  lengths_from_perron(worked_eta()));
  REQUIRE(rep.points.size() == 4);
  CHECK(rep.points[0].str() == "0");
  CHECK(rep.points[1].str() == "3/2+1/2*sqrt(5)");
  CHECK(rep.points[2].str() == "2+1*sqrt(5)");
  CHECK(rep.points[3].str() == "7/2+3/2*sqrt(5)");
}

TEST_CASE("the drawing of the fixed point is self-similar under the eigenvalue") {
  GeoRep<Ternary> rep = worked_rep(400);
  Quadratic lambda = perron(worked_eta()).lambda;
  auto patterns = check_selfsimilar(rep, lambda);
  REQUIRE(patterns.size() == 3);
  CHECK(patterns.at(Ternary::A).size() == 2);  // eta(A) = B
  CHECK(patterns.at(Ternary::B).size() == 4);  // eta(B) = BCB
  CHECK(patterns.at(Ternary::C).size() == 4);  // eta(C) = CAC

  const Quadratic &lb = rep.lengths.of(Ternary::B), &lc = rep.lengths.of(Ternary::C);
  std::vector<Quadratic> expect_b{Quadratic(0), lb, lb + lc, lb + lc + lb};
  CHECK(patterns.at(Ternary::B) == expect_b);

  // the stretched copy of every safe point is again a point
  for (const Quadratic& t : rep.points) {
    Quadratic s = lambda * t;
    if (s > rep.points.back()) continue;
    CHECK(std::binary_search(rep.points.begin(), rep.points.end(), s));
  }
}

TEST_CASE("reading the substitution back from the geometry") {
  Quadratic lambda = perron(worked_eta()).lambda;
  CHECK(substitution_from_geometry(worked_rep(400), lambda) == worked_eta());

  auto sq = ter_m("A:ACA,B:BAB,C:B");
  GeoRep<Ternary> rep = build_rep(fixed_point_prefix(sq, 400), lengths_from_perron(sq));
  CHECK(substitution_from_geometry(rep, perron(sq).lambda) == sq);
}

TEST_CASE("wrong stretch factors are refuted") {
  GeoRep<Ternary> rep = worked_rep(400);
  CHECK_THROWS_AS(check_selfsimilar(rep, Quadratic(2)), NotSelfSimilar);
  try {
    check_selfsimilar(rep, Quadratic(2));
    FAIL("expected a refutation");
  } catch (const NotSelfSimilar& e) {
    CHECK(e.gap_index == 0);  // already the first stretched gap misses
  }
  // the dominant eigenvalue of the square root arrangement maps several
  // points into the set, but letter patterns disagree
  CHECK_THROWS_AS(check_selfsimilar(rep, Quadratic::make(Rational(1, 2), Rational(1, 2), 5)),
                  NotSelfSimilar);
  CHECK_THROWS_AS(check_selfsimilar(rep, Quadratic(Rational(1, 2))), InvalidParameters);
  CHECK_THROWS_AS(check_selfsimilar(rep, Quadratic(1)), InvalidParameters);
}

TEST_CASE("tampered drawings are refuted") {
  Quadratic lambda = perron(worked_eta()).lambda;

  // nudge one interior point
  GeoRep<Ternary> nudged = worked_rep(200);
  nudged.points[50] += Quadratic(Rational(1, 1000));
  CHECK_THROWS_AS(check_selfsimilar(nudged, lambda), NotSelfSimilar);

  // swap two adjacent distinct letters and redraw
  Word<Ternary> w = fixed_point_prefix(worked_eta(), 300);
  std::size_t i = 100;
  while (w[i] == w[i + 1]) ++i;
  std::vector<Letter> letters(w.begin(), w.end());
  std::swap(letters[i], letters[i + 1]);
  GeoRep<Ternary> swapped =
      build_rep(Word<Ternary>(std::move(letters)), lengths_from_perron(worked_eta()));
  CHECK_THROWS_AS(check_selfsimilar(swapped, lambda), NotSelfSimilar);

  // malformed point sets are rejected outright
  GeoRep<Ternary> broken = worked_rep(20);
  broken.points.pop_back();
  CHECK_THROWS_AS(check_selfsimilar(broken, lambda), InvalidParameters);
  GeoRep<Ternary> unsorted = worked_rep(20);
  std::swap(unsorted.points[3], unsorted.points[4]);
  CHECK_THROWS_AS(check_selfsimilar(unsorted, lambda), InvalidParameters);
}

TEST_CASE("windows too short to read anything") {
  LengthAssignment<Ternary> len = lengths_from_perron(worked_eta());
  Quadratic lambda = perron(worked_eta()).lambda;
  GeoRep<Ternary> tiny = build_rep(Word<Ternary>::from_string("B"), len);
  CHECK_THROWS_AS(check_selfsimilar(tiny, lambda), WindowTooShort);

  // three letters: only the first stretched gap fits, so A and C stay unseen
  GeoRep<Ternary> three = build_rep(Word<Ternary>::from_string("BCB"), len);
  CHECK_NOTHROW(check_selfsimilar(three, lambda));
  CHECK_THROWS_AS(substitution_from_geometry(three, lambda), WindowTooShort);
}

TEST_CASE("gaps that match no letter length") {
  LengthAssignment<Binary> len({Quadratic(1), Quadratic(2)});
  GeoRep<Binary> rep{Word<Binary>::from_string("00"), len,
                     {Quadratic(0), Quadratic(1), Quadratic(Rational(5, 2))}};
  auto patterns = check_selfsimilar(rep, Quadratic(Rational(5, 2)));
  REQUIRE(patterns.count(Binary::Zero) == 1);
  CHECK_THROWS_AS(substitution_from_geometry(rep, Quadratic(Rational(5, 2))), AmbiguousLength);
}

TEST_CASE("refining the drawing into two binary drawings") {
  GeoRep<Ternary> rep = worked_rep(300);
  SturmianReps reps = sturmian_insertions(rep);

  CHECK(reps.rep01.word == sigma01()(rep.word));
  CHECK(reps.rep10.word == sigma10()(rep.word));
  CHECK(reps.rep01.lengths.of(Binary::Zero) == rep.lengths.of(Ternary::A));
  CHECK(reps.rep01.lengths.of(Binary::One) == rep.lengths.of(Ternary::C));

  // the refinement adds one point inside every B gap and keeps the rest
  std::vector<Quadratic> expect01, expect10;
  for (std::size_t n = 0; n < rep.word.size(); ++n) {
    expect01.push_back(rep.points[n]);
    expect10.push_back(rep.points[n]);
    if (rep.word[n] == Ternary::B) {
      expect01.push_back(rep.points[n] + rep.lengths.of(Ternary::A));
      expect10.push_back(rep.points[n] + rep.lengths.of(Ternary::C));
    }
  }
  expect01.push_back(rep.points.back());
  expect10.push_back(rep.points.back());
  CHECK(reps.rep01.points == expect01);
  CHECK(reps.rep10.points == expect10);
}

TEST_CASE("refined drawings recover the split pair") {
  auto run = [](const char* s) {
    auto eta = ter_m(s);
    GeoRep<Ternary> rep = build_rep(fixed_point_prefix(eta, 400), lengths_from_perron(eta));
    SturmianReps reps = sturmian_insertions(rep);
    Quadratic lambda = perron(eta).lambda;
    Decomposition d = decompose(eta);
    CHECK(substitution_from_geometry(reps.rep01, lambda) == d.phi);
    CHECK(substitution_from_geometry(reps.rep10, lambda) == d.psi);
  };
  run("A:B,B:BCB,C:CAC");
  run("A:ACA,B:BAB,C:B");
}

TEST_CASE("refinement requires the additive length relation") {
  LengthAssignment<Ternary> bad({Quadratic(1), Quadratic(Rational(5, 2)), Quadratic(3)});
  GeoRep<Ternary> rep = build_rep(Word<Ternary>::from_string("ABC"), bad);
  CHECK_THROWS_AS(sturmian_insertions(rep), LengthMismatch);
}

TEST_CASE("words without B refine to a relabeling") {
  GeoRep<Ternary> rep =
      build_rep(Word<Ternary>::from_string("CAC"), lengths_from_perron(worked_eta()));
  SturmianReps reps = sturmian_insertions(rep);
  CHECK(reps.rep01.word.str() == "101");
  CHECK(reps.rep01.points == rep.points);
  CHECK(reps.rep10.points == rep.points);
}
