#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <utility>
#include <vector>

#include "osc/finite_osc.hpp"
#include "test_support.hpp"

namespace {

using osc::finite::FiniteNatSet;
using osc::finite::Nat;
using testsupport::errorCode;

// Independent oracle: the classes of the symmetric difference under
// "the whole integer interval [n, m] stays on one side" are exactly the
// maximal runs of consecutive integers inside s minus t and inside t minus s.
Nat runsOf(const std::set<Nat>& xs) {
  Nat count = 0;
  bool have = false;
  Nat prev = 0;
  for (Nat v : xs) {
    if (!have || v != prev + 1) ++count;
    prev = v;
    have = true;
  }
  return count;
}

Nat bruteOsc(const FiniteNatSet& s, const FiniteNatSet& t) {
  std::set<Nat> sOnly, tOnly;
  for (Nat v : s.elements())
    if (!t.contains(v)) sOnly.insert(v);
  for (Nat v : t.elements())
    if (!s.contains(v)) tOnly.insert(v);
  return runsOf(sOnly) + runsOf(tOnly);
}

// Independent recomputation of the triple oscillation straight from the
// definitions: cut the sets at the least n + 1 making the cuts pairwise
// distinct, then take the oscillation of the two distinct traces below n.
Nat bruteOscTriple(const FiniteNatSet& s, const FiniteNatSet& t, const FiniteNatSet& u) {
  Nat top = 0;
  for (const auto* x : {&s, &t, &u})
    if (!x->empty()) top = std::max(top, x->max());
  for (Nat n = 0; n <= top + 1; ++n) {
    FiniteNatSet a = s.initialSegment(n + 1), b = t.initialSegment(n + 1),
                 c = u.initialSegment(n + 1);
    if (a != b && b != c && a != c) {
      FiniteNatSet x = s.initialSegment(n), y = t.initialSegment(n), z = u.initialSegment(n);
      FiniteNatSet v = x, w = (y != x) ? y : z;
      return bruteOsc(v, w);
    }
  }
  return 0;  // unreachable for pairwise distinct inputs
}

TEST_CASE("pair oscillation on frozen examples") {
  CHECK(osc::finite::oscFinite({1, 2, 3}, {1, 2, 3}) == 0);
  CHECK(osc::finite::oscFinite({1}, {2}) == 2);
  CHECK(osc::finite::oscFinite({1, 2, 3}, {3, 4}) == 2);
  // A pair whose symmetric difference splits into four one-sided blocks.
  FiniteNatSet s{0, 1, 6, 7}, t{3, 4, 9, 10};
  CHECK(osc::finite::oscFinite(s, t) == 4);
  CHECK(bruteOsc(s, t) == 4);
}

TEST_CASE("pair oscillation agrees with the block-run oracle") {
  std::vector<std::pair<FiniteNatSet, FiniteNatSet>> pairs = {
      {{}, {}},           {{0}, {}},         {{1, 2}, {2, 3}},    {{0, 2, 4}, {1, 3, 5}},
      {{5, 6, 7}, {5}},   {{1, 3}, {1, 4}},  {{0, 1, 2}, {4, 5}}, {{10}, {10}},
      {{0, 3, 6}, {0, 6}}};
  for (const auto& [a, b] : pairs) {
    CAPTURE(a.str());
    CAPTURE(b.str());
    CHECK(osc::finite::oscFinite(a, b) == bruteOsc(a, b));
    CHECK(osc::finite::oscFinite(a, b) == osc::finite::oscFinite(b, a));
  }
}

TEST_CASE("first difference of a pair") {
  CHECK(osc::finite::deltaPair({1, 3}, {1, 4}) == 3);
  CHECK(osc::finite::deltaPair({0}, {}) == 0);
  CHECK(errorCode([] { osc::finite::deltaPair({2}, {2}); }) == "EqualSets");
}

TEST_CASE("triple oscillation on frozen examples") {
  CHECK(osc::finite::oscTriple({0}, {1}, {2}) == 1);
  FiniteNatSet s{0, 5}, t{1, 5}, u{0, 1};
  CHECK(osc::finite::oscTriple(s, t, u) == 1);
  CHECK(bruteOscTriple(s, t, u) == 1);
  CHECK(errorCode([] { osc::finite::oscTriple({1}, {1}, {2}); }) == "NotDistinct");
}

TEST_CASE("triple oscillation agrees with the brute recomputation") {
  std::vector<std::array<FiniteNatSet, 3>> triples = {
      {{FiniteNatSet{0}, FiniteNatSet{1}, FiniteNatSet{2}}},
      {{FiniteNatSet{0, 5}, FiniteNatSet{1, 5}, FiniteNatSet{0, 1}}},
      {{FiniteNatSet{0, 2, 4}, FiniteNatSet{1, 2, 4}, FiniteNatSet{0, 3}}},
      {{FiniteNatSet{}, FiniteNatSet{3}, FiniteNatSet{3, 4}}},
      {{FiniteNatSet{1, 2, 7}, FiniteNatSet{1, 2, 8}, FiniteNatSet{1, 6}}}};
  for (const auto& tr : triples) {
    CAPTURE(tr[0].str());
    CAPTURE(tr[1].str());
    CAPTURE(tr[2].str());
    CHECK(osc::finite::oscTriple(tr[0], tr[1], tr[2]) == bruteOscTriple(tr[0], tr[1], tr[2]));
  }
}

TEST_CASE("closure membership in the truncated family") {
  auto X = osc::finite::FamilyOracle::canonical(2, 16);
  CHECK(osc::finite::inClosure(FiniteNatSet{}, X));
  CHECK_FALSE(osc::finite::inClosure(FiniteNatSet{0, 1}, X));
  auto none = osc::finite::FamilyOracle::fromPredicate(
      [](const FiniteNatSet&) { return false; }, 16, "empty");
  CHECK_FALSE(osc::finite::inClosure(FiniteNatSet{3}, none));
}

TEST_CASE("truncated derivative membership") {
  auto X = osc::finite::FamilyOracle::canonical(2, 64);
  auto D1 = osc::finite::truncatedDerivative(X, 1);
  CHECK(D1.member(FiniteNatSet{}));
  for (Nat i = 0; i <= 32; ++i) CHECK(D1.member(FiniteNatSet{i}));
  CHECK_FALSE(D1.member(FiniteNatSet{0, 1}));

  auto same = osc::finite::truncatedDerivative(X, 0);
  CHECK(same.member(FiniteNatSet{0, 1}) == X.member(FiniteNatSet{0, 1}));
  CHECK(same.member(FiniteNatSet{5}) == X.member(FiniteNatSet{5}));
  CHECK(same.member(FiniteNatSet{1, 2, 3}) == X.member(FiniteNatSet{1, 2, 3}));

  // On an explicit list, a set whose extensions are exhausted dies; a set
  // already sitting at the element bound survives vacuously.
  auto L = osc::finite::FamilyOracle::fromList({FiniteNatSet{0}, FiniteNatSet{2}});
  auto DL = osc::finite::truncatedDerivative(L, 1);
  CHECK_FALSE(DL.member(FiniteNatSet{0}));
  CHECK(DL.member(FiniteNatSet{2}));
  CHECK_FALSE(DL.member(FiniteNatSet{1}));
}

TEST_CASE("depth-k chains realize every pair value up to 2k-1") {
  auto X = osc::finite::FamilyOracle::canonical(2, 64);
  auto cert = osc::finite::canonicalCertificate(2, 64);
  osc::finite::validateCertificate(X, cert);
  auto pairs = osc::finite::realizeOscillations(X, cert);
  REQUIRE(pairs.size() == 3);
  for (Nat v = 1; v <= 3; ++v) {
    REQUIRE(pairs.count(v) == 1);
    const auto& [a, b] = pairs.at(v);
    CHECK(X.member(a));
    CHECK(X.member(b));
    CHECK(osc::finite::oscFinite(a, b) == v);
    CHECK(bruteOsc(a, b) == v);
  }

  auto cert1 = osc::finite::canonicalCertificate(1, 8);
  auto one = osc::finite::realizeOscillations(osc::finite::FamilyOracle::canonical(1, 8), cert1);
  REQUIRE(one.size() == 1);
  CHECK(osc::finite::oscFinite(one.at(1).first, one.at(1).second) == 1);

  auto corrupt = cert;
  corrupt.uChain[1] = corrupt.tChain[1];
  CHECK(errorCode([&] { osc::finite::validateCertificate(X, corrupt); }) == "InvalidCertificate");
  CHECK(errorCode([&] { osc::finite::realizeOscillations(X, corrupt); }) == "InvalidCertificate");
}

TEST_CASE("depth-k chains realize every triple value up to 2k-1") {
  auto X = osc::finite::FamilyOracle::canonical(2, 64);
  auto cert = osc::finite::canonicalCertificate(2, 64);
  auto triples = osc::finite::realizeOscTriple(X, cert);
  REQUIRE(triples.size() == 3);
  for (Nat v = 1; v <= 3; ++v) {
    REQUIRE(triples.count(v) == 1);
    const auto& tr = triples.at(v);
    for (const auto& m : tr) CHECK(X.member(m));
    CHECK(osc::finite::oscTriple(tr[0], tr[1], tr[2]) == v);
    CHECK(bruteOscTriple(tr[0], tr[1], tr[2]) == v);
  }

  auto one = osc::finite::realizeOscTriple(osc::finite::FamilyOracle::canonical(1, 8),
                                           osc::finite::canonicalCertificate(1, 8));
  REQUIRE(one.size() == 1);
  CHECK(osc::finite::oscTriple(one.at(1)[0], one.at(1)[1], one.at(1)[2]) == 1);

  auto corrupt = cert;
  corrupt.tChain[2] = corrupt.tChain[1];
  CHECK(errorCode([&] { osc::finite::realizeOscTriple(X, corrupt); }) == "InvalidCertificate");
}

TEST_CASE("set text form round-trips and rejects disorder") {
  CHECK(FiniteNatSet::parse("1,4,9").str() == "1,4,9");
  CHECK(FiniteNatSet::parse("") == FiniteNatSet{});
  CHECK(errorCode([] { FiniteNatSet::parse("3,2"); }) == "ParseError");
  CHECK(errorCode([] { FiniteNatSet::parse("1,,2"); }) == "ParseError");
}

}  // namespace
