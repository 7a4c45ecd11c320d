#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "osc/lspace.hpp"
#include "test_support.hpp"

namespace {

using osc::lspace::CircleAngle;
using osc::lspace::Nat;
using osc::lspace::Rat;
using osc::ord::Ordinal;
using testsupport::errorCode;

Ordinal o(const char* text) { return Ordinal::parse(text); }

TEST_CASE("powers of exact angles") {
  auto z = osc::lspace::angleSqrt(2);
  CHECK(osc::lspace::anglePower(z, 1) == z);
  CHECK(osc::lspace::anglePower(osc::lspace::angleFromRational(Rat(1, 3)), 3) ==
        osc::lspace::angleZero());
  auto sq = osc::lspace::anglePower(z, 2);
  REQUIRE(sq.terms.size() == 1);
  CHECK(sq.terms[0].first == 2);
  CHECK(sq.terms[0].second == Rat(2));

  // Power laws hold as canonical forms.
  auto mix = osc::lspace::angleMul(osc::lspace::angleFromRational(Rat(2, 7)),
                                   osc::lspace::angleSqrt(5));
  for (Nat a : {Nat{2}, Nat{3}, Nat{10}})
    for (Nat b : {Nat{4}, Nat{9}}) {
      CHECK(osc::lspace::anglePower(osc::lspace::anglePower(mix, a), b) ==
            osc::lspace::anglePower(mix, a * b));
    }
  CHECK(errorCode([] { osc::lspace::angleSqrt(8); }) == "PreconditionViolated");
}

TEST_CASE("chordal distances") {
  auto zero = osc::lspace::angleZero();
  auto half = osc::lspace::angleFromRational(Rat(1, 2));
  auto quarter = osc::lspace::angleFromRational(Rat(1, 4));
  CHECK(osc::lspace::angleDistance(half, half) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(osc::lspace::angleDistance(zero, half) == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(osc::lspace::angleDistance(zero, quarter) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
}

TEST_CASE("angle text round-trips") {
  std::vector<CircleAngle> angles = {
      osc::lspace::angleZero(),
      osc::lspace::angleFromRational(Rat(5, 6)),
      osc::lspace::angleSqrt(2),
      osc::lspace::angleMul(osc::lspace::angleFromRational(Rat(1, 3)),
                            osc::lspace::angleSqrt(7)),
      osc::lspace::angleInverse(osc::lspace::angleMul(osc::lspace::angleSqrt(2),
                                                      osc::lspace::angleSqrt(15))),
  };
  for (const auto& a : angles) {
    CAPTURE(osc::lspace::angleText(a));
    CHECK(osc::lspace::parseAngle(osc::lspace::angleText(a)) == a);
  }
  // Conveniences: square factors fold, sqrt(0) and sqrt(1) are rational.
  CHECK(osc::lspace::parseAngle("sqrt(8)") == osc::lspace::anglePower(osc::lspace::angleSqrt(2), 2));
  CHECK(osc::lspace::parseAngle("sqrt(12) - sqrt(3)") == osc::lspace::angleSqrt(3));
  CHECK(osc::lspace::parseAngle("sqrt(0)") == osc::lspace::angleZero());
  CHECK(osc::lspace::parseAngle("1/2 + sqrt(1)") == osc::lspace::angleFromRational(Rat(1, 2)));
  CHECK(errorCode([] { osc::lspace::parseAngle("2**sqrt(2)"); }) == "ParseError");
  CHECK(errorCode([] { osc::lspace::parseAngle("sqrt(2"); }) == "ParseError");
  CHECK(errorCode([] { osc::lspace::parseAngle(""); }) == "ParseError");
  CHECK(errorCode([] { osc::lspace::parseAngle("1/0"); }) == "ParseError");
}

TEST_CASE("session points get distinct square roots") {
  osc::lspace::ZAssignment Z({o("1"), o("2"), o("w")});
  CHECK(Z.squarefreeOf(o("1")) == 2);
  CHECK(Z.squarefreeOf(o("2")) == 3);
  CHECK(Z.squarefreeOf(o("w")) == 5);
  CHECK(Z.angleOf(o("1")) == osc::lspace::angleSqrt(2));
  CHECK(Z.contains(o("2")));
  CHECK_FALSE(Z.contains(o("7")));
  CHECK(errorCode([&] { Z.angleOf(o("7")); }) == "UnassignedOrdinal");
}

TEST_CASE("power search on the circle") {
  auto z = osc::lspace::angleSqrt(2);
  auto u = osc::lspace::angleZero();
  auto v = osc::lspace::angleFromRational(Rat(1, 2));
  CHECK(osc::lspace::kroneckerSearch({z}, {u}, {v}, 0.3, 100) == 6);
  CHECK(osc::lspace::kroneckerSearch({z}, {u}, {u}, 0.3, 100) == 0);
  CHECK(errorCode([&] { osc::lspace::kroneckerSearch({z}, {u}, {v}, 1e-12, 1); }) ==
        "CapExceeded");
  CHECK(errorCode([&] { osc::lspace::kroneckerSearch({z}, {u, v}, {v}, 0.3, 100); }) ==
        "LengthMismatch");
  // The returned step really lands inside the ball, and no earlier one does.
  Nat m = osc::lspace::kroneckerSearch({z}, {u}, {v}, 0.3, 100);
  for (Nat i = 0; i <= m; ++i) {
    double d = osc::lspace::angleDistance(
        osc::lspace::angleMul(u, osc::lspace::anglePower(z, i)), v);
    if (i < m)
      CHECK(d >= 0.3);
    else
      CHECK(d < 0.3);
  }
}

TEST_CASE("pair colours") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  osc::lspace::ZAssignment Z({o("1"), o("2"), o("3"), o("w")});

  // Zero oscillation keeps the base point: exponent one.
  auto base = osc::lspace::mooreColor(o("1"), o("w"), Z, sys, C);
  CHECK(base == Z.angleOf(o("1")));

  // The colour decomposes as base raised to oscillation + 1.
  auto r = osc::walks::oscOrdinal(sys, o("3"), o("w"), C);
  CHECK(osc::lspace::mooreColor(o("3"), o("w"), Z, sys, C) ==
        osc::lspace::anglePower(Z.angleOf(o("3")), r.value + 1));

  CHECK(errorCode([&] { osc::lspace::mooreColor(o("5"), o("w"), Z, sys, C); }) ==
        "UnassignedOrdinal");
  CHECK(errorCode([&] { osc::lspace::mooreColor(o("0"), o("w"), Z, sys, C); }) == "OutOfRange");
  CHECK(errorCode([&] { osc::lspace::mooreColor(o("w"), o("w"), Z, sys, C); }) == "OutOfRange");
}

TEST_CASE("point family conventions") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  osc::lspace::ZAssignment Z({o("1"), o("2"), o("w")});

  CHECK(osc::lspace::wPoint(o("w"), o("w"), Z, sys, C) == osc::lspace::angleZero());
  CHECK(osc::lspace::wPoint(o("w"), o("w*5"), Z, sys, C) == osc::lspace::angleZero());
  CHECK(osc::lspace::wPoint(o("w"), o("0"), Z, sys, C) == osc::lspace::angleZero());
  CHECK(osc::lspace::wPoint(o("w"), o("1"), Z, sys, C) ==
        osc::lspace::mooreColor(o("1"), o("w"), Z, sys, C));
  CHECK(errorCode([&] { osc::lspace::wPoint(o("w"), o("3"), Z, sys, C); }) ==
        "UnassignedOrdinal");
}

TEST_CASE("sampled points stay on the circle") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  osc::lspace::ZAssignment Z({o("1"), o("2"), o("3")});

  CHECK(osc::lspace::sampleLSpace({}, {o("w")}, Z, sys, C).empty());

  auto singleRows = osc::lspace::sampleLSpace({o("1")}, {o("w")}, Z, sys, C);
  REQUIRE(singleRows.size() == 1);
  CHECK(singleRows[0].angle == osc::lspace::mooreColor(o("1"), o("w"), Z, sys, C));

  auto rows = osc::lspace::sampleLSpace({o("1"), o("2"), o("3")}, {o("w"), o("w*2"), o("w^(2)")},
                                        Z, sys, C);
  REQUIRE(rows.size() == 9);
  for (const auto& row : rows)
    CHECK(row.x * row.x + row.y * row.y == doctest::Approx(1.0).epsilon(1e-9));

  auto csv = osc::lspace::sampleCsv(rows);
  CHECK(csv.rfind("beta,xi,angle_rational,angle_terms,x,y\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : csv)
    if (c == '\n') ++lines;
  CHECK(lines == 10);
}

TEST_CASE("neighbourhood search over tuple families") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);
  osc::lspace::ZAssignment Z({o("1"), o("2"), o("w")});

  // A ball wider than the circle accepts the first admissible pair.
  auto all = osc::lspace::neighborhoodHit({{o("1")}}, {{o("w")}}, {osc::lspace::angleZero()},
                                          2.5, {0}, Z, sys, C, 100);
  CHECK(all.hit);
  CHECK(all.pairsExamined == 1);
  REQUIRE(all.a.has_value());
  REQUIRE(all.b.has_value());
  CHECK(*all.a == std::vector<Ordinal>{o("1")});
  CHECK(*all.b == std::vector<Ordinal>{o("w")});

  // A tight ball around the antipode exhausts and reports the miss.
  auto color = osc::lspace::mooreColor(o("1"), o("w"), Z, sys, C);
  auto far = osc::lspace::angleMul(color, osc::lspace::angleFromRational(Rat(1, 2)));
  auto miss = osc::lspace::neighborhoodHit({{o("1")}}, {{o("w")}}, {far}, 1e-6, {0}, Z, sys, C,
                                           100);
  CHECK_FALSE(miss.hit);
  CHECK(miss.pairsExamined == 1);
  CHECK(miss.hasNearestMiss);
  CHECK(miss.nearestMiss == doctest::Approx(2.0).epsilon(1e-9));
  REQUIRE(miss.nearestA.has_value());
  CHECK(*miss.nearestA == std::vector<Ordinal>{o("1")});

  // Shape violations are rejected.
  CHECK(errorCode([&] {
          osc::lspace::neighborhoodHit({{o("1")}}, {{o("w")}}, {osc::lspace::angleZero()}, 0.5,
                                       {3}, Z, sys, C, 10);
        }) == "PreconditionViolated");
}

}  // namespace
