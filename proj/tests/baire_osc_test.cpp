#include <doctest.h>

#include <optional>
#include <vector>

#include "osc/baire_osc.hpp"
#include "test_support.hpp"

namespace {

using osc::baire::BitStream;
using osc::baire::Nat;
using osc::baire::PrefixTriple;
using testsupport::errorCode;

TEST_CASE("oscillation bits of a prefix triple") {
  PrefixTriple<Nat> t;
  t.x = {2, 5, 9};
  t.y = {0, 3, 7};
  t.z = {1, 4, 6};
  t.window = 9;
  CHECK(osc::baire::bitsToString(osc::baire::oscInfinite(t)) == "001");

  PrefixTriple<Nat> noX;
  noX.y = {0, 3};
  noX.z = {1, 4};
  CHECK(osc::baire::oscInfinite(noX).empty());

  PrefixTriple<Nat> same;
  same.x = {2, 5, 9};
  same.y = {0, 3, 7};
  same.z = same.y;
  CHECK(osc::baire::bitsToString(osc::baire::oscInfinite(same)) == "000");
}

TEST_CASE("bit realization over full trees") {
  auto full = osc::baire::fullTree();

  SUBCASE("empty target keeps the least splitting roots") {
    auto t = osc::baire::realizeBits(full, full, full, {});
    CHECK(t.x.empty());
    CHECK(t.y.empty());
    CHECK(t.z.empty());
    CHECK_FALSE(t.window.has_value());
    CHECK(osc::baire::oscInfinite(t).empty());
  }

  SUBCASE("the 0110 target and its frozen prefixes") {
    auto bits = osc::baire::bitsFromString("0110");
    auto t = osc::baire::realizeBits(full, full, full, bits);
    CHECK(t.x == std::vector<Nat>{2, 5, 8, 11});
    CHECK(t.y == std::vector<Nat>{0, 4, 7, 9});
    CHECK(t.z == std::vector<Nat>{1, 3, 6, 10});
    REQUIRE(t.window.has_value());
    CHECK(*t.window == 11);
    CHECK(osc::baire::oscInfinite(t) == bits);
  }

  SUBCASE("a 16-bit target round-trips") {
    auto bits = osc::baire::bitsFromString("1011001110001101");
    auto t = osc::baire::realizeBits(full, full, full, bits);
    CHECK(osc::baire::oscInfinite(t) == bits);
  }
}

TEST_CASE("bit string text form") {
  auto bits = osc::baire::bitsFromString("0110");
  CHECK(bits == std::vector<int>{0, 1, 1, 0});
  CHECK(osc::baire::bitsToString(bits) == "0110");
  CHECK(errorCode([] { osc::baire::bitsFromString("012"); }) == "ParseError");
}

TEST_CASE("first disagreement of streams") {
  auto a = osc::baire::alternatingStream(0);
  auto b = osc::baire::alternatingStream(1);
  CHECK(osc::baire::streamDelta(a, b, 10) == 0);
  auto c = osc::baire::streamFromBits({0, 1, 0, 0}, 0);
  CHECK(osc::baire::streamDelta(a, c, 100) == 3);
  CHECK(errorCode([&] { osc::baire::streamDelta(a, a, 100); }) == "SearchBudgetExceeded");
}

TEST_CASE("stage indices of the image map") {
  auto D = osc::baire::dyadicFamily();
  auto x = osc::baire::alternatingStream(0);
  CHECK(osc::baire::kIndex(x, D, 0) == 0);

  // x = 1000..., d0 = 000..., d1 = 111...: stage 1 wants a strictly deeper
  // agreement than with d0 (depth 0), and d1 agrees to depth exactly 1.
  auto x1 = osc::baire::streamFromBits({1}, 0);
  osc::baire::StreamFamily fam = [](Nat k) -> BitStream {
    if (k == 0) return osc::baire::streamFromBits({}, 0);
    if (k == 1) return osc::baire::streamFromBits({}, 1);
    return osc::baire::streamFromBits({1, 0, 1}, 0);
  };
  CHECK(osc::baire::kIndex(x1, fam, 1) == 1);

  // A stream that is itself in the family makes some stage's comparison
  // bottomless, so the depth budget trips.
  auto member = osc::baire::dyadicStream(2);
  CHECK(errorCode([&] { osc::baire::kIndex(member, D, 1); }) == "SearchBudgetExceeded");
}

TEST_CASE("image sequences grow strictly") {
  auto D = osc::baire::dyadicFamily();
  CHECK(osc::baire::superperfectImage(osc::baire::alternatingStream(0), D, 0).empty());

  // The binary expansion of one third: 010101... Its stage indices grow
  // fourfold per stage, so eight stages need a wide index budget.
  osc::baire::SearchBudget wide{10'000, 200'000};
  auto third = osc::baire::alternatingStream(0);
  auto img = osc::baire::superperfectImage(third, D, 8, wide);
  REQUIRE(img.size() == 8);
  for (std::size_t i = 1; i < img.size(); ++i) CHECK(img[i - 1] < img[i]);

  // Streams agreeing to depth d have the same image values below d.
  std::vector<int> prefix;
  for (int i = 0; i < 12; ++i) prefix.push_back(i % 2);
  auto twin = osc::baire::streamFromBits(prefix, 1);
  auto imgTwin = osc::baire::superperfectImage(twin, D, 8, wide);
  for (std::size_t i = 0; i < img.size() && img[i] < 12; ++i) {
    CAPTURE(i);
    CHECK(imgTwin[i] == img[i]);
  }
}

TEST_CASE("image steps carry their defining properties") {
  auto D = osc::baire::dyadicFamily();
  auto x = osc::baire::alternatingStream(1);  // 1010... is not in the family
  auto steps = osc::baire::imageSteps(x, D, 5);
  REQUIRE(steps.size() == 5);
  CHECK(steps[0].k == 0);
  for (std::size_t i = 1; i < steps.size(); ++i) {
    CHECK(steps[i - 1].delta < steps[i].delta);
    // The chosen index is minimal: every smaller index agrees no deeper than
    // the previous stage did.
    for (Nat k = 0; k < steps[i].k; ++k)
      CHECK(osc::baire::streamDelta(x, D(k), 10'000) <= steps[i - 1].delta);
    CHECK(osc::baire::streamDelta(x, D(steps[i].k), 10'000) == steps[i].delta);
  }
}

}  // namespace
