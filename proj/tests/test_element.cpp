#include <vector>

#include "doctest.h"
#include "hfs/element.hpp"
#include "hfs/fixtures.hpp"

using namespace hfs;
using fixtures::el;

TEST_CASE("degree parse accepts the documented shapes") {
  CHECK(Degree::parse("0.5").ticks() == 500'000'000);
  CHECK(Degree::parse(".35").ticks() == 350'000'000);
  CHECK(Degree::parse("1") == kOne);
  CHECK(Degree::parse("0") == kZero);
  CHECK(Degree::parse("0.5000") == Degree::parse("0.5"));
  CHECK(Degree::parse("0.123456789", 9).ticks() == 123'456'789);
}

TEST_CASE("degree parse rejects junk, out-of-range and over-precise input") {
  CHECK_THROWS_AS(Degree::parse(""), ParseError);
  CHECK_THROWS_AS(Degree::parse("x"), ParseError);
  CHECK_THROWS_AS(Degree::parse("1.5"), ParseError);
  CHECK_THROWS_AS(Degree::parse("-0.1"), ParseError);
  CHECK_THROWS_AS(Degree::parse("0.12345"), ParseError);      // 5 digits, default 4
  CHECK_THROWS_AS(Degree::parse("0.35", 1), ParseError);
  CHECK_THROWS_AS(Degree::parse("0.5.1"), ParseError);
  CHECK_NOTHROW(Degree::parse("0.12345", 5));
}

TEST_CASE("degree rendering strips trailing zeros") {
  CHECK(Degree::parse("0.5000").str() == "0.5");
  CHECK(Degree::parse("0.35").str() == "0.35");
  CHECK(kOne.str() == "1");
  CHECK(kZero.str() == "0");
  CHECK(Degree::parse("0.123456789", 9).str() == "0.123456789");
}

TEST_CASE("degree complement is exact and involutive") {
  Degree d = Degree::parse("0.3");
  CHECK(d.complement() == Degree::parse("0.7"));
  CHECK(d.complement().complement() == d);
  CHECK(kZero.complement() == kOne);
}

TEST_CASE("rational renders reduced, integers without a slash") {
  CHECK(Rational(17, 30).str() == "17/30");
  CHECK(Rational(14, 4).str() == "7/2");
  CHECK(Rational(7, 1).str() == "7");
  CHECK(Rational(0, 5).str() == "0");
  CHECK(Rational(1, 2) == Rational(2, 4));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("elements sort descending and keep duplicates") {
  HesitantElement h({Degree::parse("0.3"), Degree::parse("0.8"), Degree::parse("0.3")});
  CHECK(h.str() == "{0.8,0.3,0.3}");
  CHECK(h.upper() == Degree::parse("0.8"));
  CHECK(h.lower() == Degree::parse("0.3"));
  CHECK(h.size() == 3);
  CHECK_THROWS_AS(HesitantElement(std::vector<Degree>{}), HfsError);
}

TEST_CASE("element mean is an exact rational") {
  CHECK(el({"0.7", "0.5", "0.5"}).mean() == Rational(17, 30));
  CHECK(el({"0.5"}).mean() == Rational(1, 2));
  CHECK(el({"0.3", "0.3"}).mean() == Rational(3, 10));
}

TEST_CASE("the six inclusion kinds on hand-picked pairs") {
  HesitantElement a = el({"0.6", "0.3"});
  HesitantElement b = el({"0.7", "0.2"});

  CHECK(elem_includes(InclusionKind::P, a, b));       // 0.6 <= 0.7
  CHECK_FALSE(elem_includes(InclusionKind::A, a, b)); // but 0.3 > 0.2
  CHECK(elem_includes(InclusionKind::A, a, el({"0.7", "0.4"})));

  // means 9/20 vs 9/20: M holds both ways on a tie.
  CHECK(elem_includes(InclusionKind::M, a, b));
  CHECK(elem_includes(InclusionKind::M, b, a));

  // S needs |h1| >= |h2| and domination on the shared prefix.
  CHECK(elem_includes(InclusionKind::S, el({"0.6", "0.3", "0.1"}), el({"0.7", "0.4"})));
  CHECK_FALSE(elem_includes(InclusionKind::S, el({"0.6"}), el({"0.7", "0.4"})));

  // T needs |h1| < |h2|.
  CHECK(elem_includes(InclusionKind::T, el({"0.6"}), el({"0.7", "0.4"})));
  CHECK_FALSE(elem_includes(InclusionKind::T, el({"0.6", "0.3"}), el({"0.7"})));
  CHECK_FALSE(elem_includes(InclusionKind::T, el({"0.6", "0.3"}), el({"0.7", "0.5"})));

  // N compares h1's max against h2's min.
  CHECK(elem_includes(InclusionKind::N, el({"0.4", "0.1"}), el({"0.9", "0.4"})));
  CHECK_FALSE(elem_includes(InclusionKind::N, el({"0.5", "0.1"}), el({"0.9", "0.4"})));

  CHECK(elem_includes_sot(el({"0.6"}), el({"0.7", "0.4"})));
  CHECK(elem_includes_sot(el({"0.6", "0.3", "0.1"}), el({"0.7", "0.4"})));
  CHECK_FALSE(elem_includes_sot(el({"0.8", "0.3"}), el({"0.7", "0.4"})));
}

TEST_CASE("union keeps degrees above the larger minimum, intersection below the smaller maximum") {
  HesitantElement h1 = el({"0.6", "0.3"});
  HesitantElement h2 = el({"0.5", "0.4"});
  CHECK(elem_union(h1, h2) == el({"0.6", "0.5", "0.4"}));
  CHECK(elem_intersect(h1, h2) == el({"0.5", "0.4", "0.3"}));

  // Degenerate overlap: only the shared extremes survive.
  CHECK(elem_union(el({"0.9"}), el({"0.2"})) == el({"0.9"}));
  CHECK(elem_intersect(el({"0.9"}), el({"0.2"})) == el({"0.2"}));
}

TEST_CASE("element complement reverses, preserves length, and is involutive") {
  HesitantElement h = el({"0.8", "0.5", "0.5", "0.1"});
  CHECK(h.complement() == el({"0.9", "0.5", "0.5", "0.2"}));
  CHECK(h.complement().complement() == h);
}

TEST_CASE("kind letters round-trip") {
  for (InclusionKind k : kAllKinds) {
    auto back = kind_from_letter(kind_letter(k));
    REQUIRE(back.has_value());
    CHECK(*back == k);
  }
  CHECK_FALSE(kind_from_letter('q').has_value());
  CHECK(kind_from_letter('P') == InclusionKind::P);
}

TEST_CASE("element regressions") {
  std::string diag;
  auto failing = fixtures::run_fixtures("elem-", &diag);
  CHECK_MESSAGE(failing.empty(), diag);
}
