#include <doctest.h>

#include <optional>
#include <vector>

#include "osc/walks.hpp"
#include "test_support.hpp"

namespace {

using osc::ord::Ordinal;
using osc::walks::Nat;
using testsupport::errorCode;

Ordinal o(const char* text) { return Ordinal::parse(text); }

TEST_CASE("ordinal text form") {
  CHECK(o("0").isZero());
  CHECK(o("w^(w)*2+w+3").terms().size() == 3);
  CHECK(o("w^(w)*2+w+3").str() == "w^(w)*2+w+3");
  for (const char* text : {"0", "1", "w", "w*2", "w+5", "w^(2)", "w^(w+1)*3+w*2+5"}) {
    CAPTURE(text);
    CHECK(o(text).str() == text);
  }
  CHECK(errorCode([] { o("w+w^(2)"); }) == "NotCNF");
  CHECK(errorCode([] { o("w^2"); }) == "ParseError");
  CHECK(errorCode([] { o(""); }) == "ParseError");
}

TEST_CASE("ordinal order and classification") {
  CHECK(o("w") < o("w+1"));
  CHECK(o("w*2") < o("w^(2)"));
  CHECK(o("w^(2)+w*3") < o("w^(2)+w*3+1"));
  CHECK(o("5").isSuccessor());
  CHECK(o("w").isLimit());
  CHECK(o("w*2+1").isSuccessor());
  CHECK(o("w^(w)").isLimit());
  CHECK(o("w+1").pred() == o("w"));
  CHECK(o("3").add(o("w")) == o("w"));
  CHECK(o("w").add(o("3")) == o("w+3"));
}

TEST_CASE("ladders of limits") {
  // The ladder of w runs 0, 1, 2, ... with no duplicated zero.
  CHECK(osc::walks::fundamental(o("w"), 0) == o("0"));
  CHECK(osc::walks::fundamental(o("w"), 5) == o("5"));
  // w*2: prepended zero, then w, w+1, w+2, ...
  CHECK(osc::walks::fundamental(o("w*2"), 0) == o("0"));
  CHECK(osc::walks::fundamental(o("w*2"), 1) == o("w"));
  CHECK(osc::walks::fundamental(o("w*2"), 2) == o("w+1"));
  CHECK(osc::walks::fundamental(o("w*2"), 3) == o("w+2"));
  // w^w: prepended zero, then the exponent ladder 1, w, w^2, ...
  CHECK(osc::walks::fundamental(o("w^(w)"), 1) == o("1"));
  CHECK(osc::walks::fundamental(o("w^(w)"), 2) == o("w"));
  CHECK(osc::walks::fundamental(o("w^(w)"), 3) == o("w^(2)"));
  CHECK(errorCode([] { osc::walks::fundamental(o("5"), 0); }) == "NotLimit");
  CHECK(errorCode([] { osc::walks::fundamental(o("0"), 0); }) == "NotLimit");

  // Strict growth and cofinality on a sample limit.
  for (Nat n = 0; n < 20; ++n)
    CHECK(osc::walks::fundamental(o("w^(2)"), n) < osc::walks::fundamental(o("w^(2)"), n + 1));
  bool passed = false;
  for (Nat n = 0; n < 100 && !passed; ++n)
    passed = osc::walks::fundamental(o("w^(2)"), n) > o("w*7+4");
  CHECK(passed);
}

TEST_CASE("walks and their traces") {
  auto C = osc::walks::CSequence::canonical();

  auto trivial = osc::walks::walk(o("w"), o("w"), C);
  CHECK(trivial.upperTrace == std::vector<Ordinal>{o("w")});
  CHECK(trivial.lowerTrace.empty());

  auto r = osc::walks::walk(o("3"), o("w*2"), C);
  CHECK(r.upperTrace == std::vector<Ordinal>{o("w*2"), o("w"), o("3")});
  CHECK(r.lowerTrace == std::vector<Ordinal>{o("0"), o("2")});

  // One successor step: the trace visits the predecessor.
  auto s = osc::walks::walk(o("w"), o("w+1"), C);
  CHECK(s.upperTrace == std::vector<Ordinal>{o("w+1"), o("w")});
  CHECK(s.lowerTrace.empty());

  CHECK(errorCode([&] { osc::walks::walk(o("0"), o("w"), C); }) == "OutOfRange");
  CHECK(errorCode([&] { osc::walks::walk(o("w+1"), o("w"), C); }) == "OutOfRange");

  // Upper traces descend strictly; lower traces never decrease.
  for (const char* a : {"1", "4", "w", "w+2", "w*3"})
    for (const char* b : {"w*3", "w^(2)", "w^(2)+w*2+5", "w^(3)"}) {
      if (!(o(a) <= o(b))) continue;
      auto w = osc::walks::walk(o(a), o(b), C);
      CAPTURE(a);
      CAPTURE(b);
      REQUIRE(!w.upperTrace.empty());
      CHECK(w.upperTrace.front() == o(b));
      CHECK(w.upperTrace.back() == o(a));
      for (std::size_t i = 1; i < w.upperTrace.size(); ++i)
        CHECK(w.upperTrace[i] < w.upperTrace[i - 1]);
      for (std::size_t i = 1; i < w.lowerTrace.size(); ++i)
        CHECK(w.lowerTrace[i - 1] <= w.lowerTrace[i]);
    }
}

TEST_CASE("trace concatenation verdicts") {
  auto C = osc::walks::CSequence::canonical();

  // L(3, w) = {2} and L(w, w*2) = {0}: the hypothesis holds and the union law
  // follows.
  auto good = osc::walks::traceConcat(o("3"), o("w"), o("w*2"), C);
  CHECK(good.hypothesisHolds);
  REQUIRE(good.conclusionHolds.has_value());
  CHECK(*good.conclusionHolds);

  // L(w+3, w*2) = {w+2} tops the minimum 2 of L(3, w+3): hypothesis fails.
  auto bad = osc::walks::traceConcat(o("3"), o("w+3"), o("w*2"), C);
  CHECK_FALSE(bad.hypothesisHolds);
  CHECK_FALSE(bad.conclusionHolds.has_value());

  // Equal endpoints leave an empty trace: excluded by precondition.
  CHECK(errorCode([&] { osc::walks::traceConcat(o("3"), o("3"), o("w"), C); }) == "OutOfRange");
}

TEST_CASE("weights of the e-system") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);

  // Successor above its predecessor: the single ladder step weighs nothing.
  CHECK(osc::walks::eValue(sys, o("6"), o("5")) == 0);
  CHECK(osc::walks::eValue(sys, o("w+1"), o("w")) == 0);
  // Below w the weight is the argument itself.
  for (Nat k = 0; k <= 5; ++k) CHECK(osc::walks::eValue(sys, o("w"), Ordinal::nat(k)) == k);
  CHECK(errorCode([&] { osc::walks::eValue(sys, o("w"), o("w")); }) == "OutOfRange");

  // Two instances agree: the memo is an implementation detail.
  osc::walks::ESystem other(C);
  for (const char* b : {"w*2", "w^(2)", "w^(2)+w"})
    for (const char* x : {"3", "w", "w+4", "w*2"}) {
      if (!(o(x) < o(b))) continue;
      CHECK(osc::walks::eValue(sys, o(b), o(x)) == osc::walks::eValue(other, o(b), o(x)));
    }
}

TEST_CASE("least disagreement search") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);

  // The canonical systems of w and w*2 agree on every finite point.
  auto none = osc::walks::deltaOrdinal(sys, o("w"), o("w*2"), 1000);
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.examined == 1000);

  // Below 1 there is a single point and the weights agree there.
  auto tiny = osc::walks::deltaOrdinal(sys, o("1"), o("w"), 50);
  CHECK_FALSE(tiny.witness.has_value());
  CHECK(tiny.examined == 1);

  // Stretching one ladder moves the weights: 0,1,2,3 then a jump to 6 keeps
  // agreement below 5 and breaks it exactly there.
  auto stretched = [](const Ordinal& lam, Nat n) -> std::optional<Ordinal> {
    if (!(lam == o("w*2"))) return std::nullopt;
    if (n <= 3) return Ordinal::nat(n);
    if (n == 4) return Ordinal::nat(6);
    return o("w").add(Ordinal::nat(n - 5));
  };
  osc::walks::ESystem moved(osc::walks::CSequence::withOverride(stretched, "stretched"));
  auto found = osc::walks::deltaOrdinal(moved, o("w"), o("w*2"), 200);
  REQUIRE(found.witness.has_value());
  CHECK(*found.witness == o("5"));

  CHECK(errorCode([&] { osc::walks::deltaOrdinal(sys, o("w"), o("w"), 10); }) == "OutOfRange");
}

TEST_CASE("oscillation along the lower trace") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);

  // Singleton trace: no adjacent pair to count.
  auto single = osc::walks::oscOrdinal(sys, o("3"), o("w"), C);
  CHECK(single.value == 0);
  CHECK(single.oscSet.empty());

  // Recount the frozen pair by hand from the trace and the weights.
  auto r = osc::walks::oscOrdinal(sys, o("3"), o("w*2"), C);
  auto rec = osc::walks::walk(o("3"), o("w*2"), C);
  Nat recount = 0;
  for (std::size_t i = 0; i + 1 < rec.lowerTrace.size(); ++i) {
    auto ea0 = osc::walks::eValue(sys, o("3"), rec.lowerTrace[i]);
    auto eb0 = osc::walks::eValue(sys, o("w*2"), rec.lowerTrace[i]);
    auto ea1 = osc::walks::eValue(sys, o("3"), rec.lowerTrace[i + 1]);
    auto eb1 = osc::walks::eValue(sys, o("w*2"), rec.lowerTrace[i + 1]);
    if (ea0 <= eb0 && ea1 > eb1) ++recount;
  }
  CHECK(r.value == recount);
  CHECK(r.value == 0);

  // The count never exceeds the number of adjacent trace pairs.
  for (const char* a : {"1", "3", "w", "w*2+1"})
    for (const char* b : {"w*2", "w^(2)", "w^(2)+w*3"}) {
      if (!(o(a) < o(b))) continue;
      auto rr = osc::walks::oscOrdinal(sys, o(a), o(b), C);
      auto ll = osc::walks::walk(o(a), o(b), C).lowerTrace.size();
      CHECK(rr.value <= (ll == 0 ? 0 : ll - 1));
      CHECK(rr.oscSet.size() == rr.value);
    }

  CHECK(errorCode([&] { osc::walks::oscOrdinal(sys, o("w"), o("w"), C); }) == "OutOfRange");
}

TEST_CASE("canonical enumeration below a bound") {
  auto below5 = osc::walks::canonicalEnumerateBelow(o("5"), 100);
  REQUIRE(below5.size() == 5);
  for (Nat k = 0; k < 5; ++k) CHECK(below5[k] == Ordinal::nat(k));

  auto belowW = osc::walks::canonicalEnumerateBelow(o("w"), 10);
  REQUIRE(belowW.size() == 10);
  for (Nat k = 0; k < 10; ++k) CHECK(belowW[k] == Ordinal::nat(k));

  // Larger budgets extend smaller ones.
  auto shortRun = osc::walks::canonicalEnumerateBelow(o("w^(2)"), 100);
  auto longRun = osc::walks::canonicalEnumerateBelow(o("w^(2)"), 500);
  REQUIRE(shortRun.size() == 100);
  REQUIRE(longRun.size() == 500);
  for (std::size_t i = 0; i < shortRun.size(); ++i) CHECK(shortRun[i] == longRun[i]);
  for (const auto& x : shortRun) CHECK(x < o("w^(2)"));
}

TEST_CASE("runs of consecutive oscillation values") {
  auto C = osc::walks::CSequence::canonical();
  osc::walks::ESystem sys(C);

  auto one = osc::walks::searchOscRun({o("1")}, {o("2")}, 3, sys, C);
  CHECK(one.length == 1);
  REQUIRE(one.alpha.has_value());
  CHECK(*one.alpha == o("1"));
  REQUIRE(one.betas.size() == 1);

  auto empty = osc::walks::searchOscRun({o("1")}, {}, 3, sys, C);
  CHECK(empty.length == 0);
  CHECK_FALSE(empty.alpha.has_value());

  // Witnesses replay: each reported beta realizes the promised value.
  std::vector<Ordinal> A{o("1"), o("3"), o("w")};
  std::vector<Ordinal> B{o("w"), o("w+1"), o("w*2"), o("w^(2)"), o("w^(2)+w")};
  auto run = osc::walks::searchOscRun(A, B, 3, sys, C);
  CHECK(run.requested == 3);
  CHECK(run.length >= 1);
  REQUIRE(run.alpha.has_value());
  REQUIRE(run.betas.size() == run.length);
  for (Nat m = 0; m < run.length; ++m) {
    auto v = osc::walks::oscOrdinal(sys, *run.alpha, run.betas[m], C);
    CHECK(v.value == run.startValue + m);
  }
}

}  // namespace
