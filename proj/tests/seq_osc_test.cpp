#include <doctest.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "osc/seq_osc.hpp"
#include "test_support.hpp"

namespace {

using osc::seq::Nat;
using osc::seq::Seq;
using testsupport::errorCode;

// Independent descent count straight from the definition.
Nat bruteOscSeq(const Seq& f, const Seq& g) {
  Nat count = 0;
  for (std::size_t n = 0; n + 1 < f.size() && n + 1 < g.size(); ++n)
    if (f[n] <= g[n] && f[n + 1] > g[n + 1]) ++count;
  return count;
}

TEST_CASE("descent count of sequence pairs") {
  Seq f{1, 4, 5, 9}, g{2, 3, 7, 8};
  CHECK(osc::seq::oscSeq(f, f) == 0);
  CHECK(osc::seq::oscSeq(f, g) == 2);
  CHECK(bruteOscSeq(f, g) == 2);
  // Another two-crossing pair, verified by the direct count.
  Seq a{0, 3, 4, 7}, b{1, 2, 5, 6};
  CHECK(osc::seq::oscSeq(a, b) == 2);
  CHECK(bruteOscSeq(a, b) == 2);
  CHECK(errorCode([] { osc::seq::oscSeq({1, 2}, {1, 2, 3}); }) == "LengthMismatch");
  CHECK(osc::seq::oscSeqPrefix({1, 2}, {1, 2, 3}) == bruteOscSeq({1, 2}, {1, 2, 3}));
}

TEST_CASE("sequence text form") {
  CHECK(osc::seq::parseSeq("1,4,9") == Seq{1, 4, 9});
  CHECK(osc::seq::strSeq({1, 4, 9}) == "1,4,9");
  CHECK(osc::seq::parseSeq("").empty());
  CHECK(errorCode([] { osc::seq::parseSeq("4,2"); }) == "ParseError");
}

TEST_CASE("splitting extensions raise the count by exactly n") {
  auto full = osc::baire::fullTree();
  auto recount = [](const osc::seq::SplitExtension& r) {
    const Seq& a = r.swapped ? r.tExtension : r.sExtension;
    const Seq& b = r.swapped ? r.sExtension : r.tExtension;
    return osc::seq::oscSeqPrefix(a, b);
  };
  auto isPrefix = [](const Seq& p, const Seq& w) {
    return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
  };

  for (Nat n : {Nat{0}, Nat{1}, Nat{5}}) {
    CAPTURE(n);
    auto r = osc::seq::extendSplitting(full, full, {}, {}, n);
    CHECK(r.finalOsc == r.baselineOsc + n);
    CHECK(recount(r) == r.finalOsc);
  }

  Seq s{1, 6}, t{2, 4};
  auto r = osc::seq::extendSplitting(full, full, s, t, 3);
  CHECK(isPrefix(s, r.sExtension));
  CHECK(isPrefix(t, r.tExtension));
  CHECK(r.finalOsc == r.baselineOsc + 3);
  CHECK(recount(r) == r.finalOsc);
}

TEST_CASE("pair encoding round-trips") {
  auto p = osc::seq::cantorPairing();
  CHECK(p.decode(0) == std::pair<Nat, Nat>{0, 0});
  CHECK(p.decode(2) == std::pair<Nat, Nat>{0, 1});
  for (Nat a = 0; a < 20; ++a)
    for (Nat b = 0; b < 20; ++b) CHECK(p.decode(p.encode(a, b)) == std::pair<Nat, Nat>{a, b});
}

TEST_CASE("refined colour reads the top bit of the count") {
  auto p = osc::seq::cantorPairing();
  // Count 6 = 2^2 + 2^1: the top bit is position 2, decoded to (0, 1).
  Seq f{0, 3, 4, 7, 8, 11, 12, 15, 16, 19, 20, 23, 24};
  Seq g{1, 2, 5, 6, 9, 10, 13, 14, 17, 18, 21, 22, 25};
  REQUIRE(osc::seq::oscSeq(f, g) == 6);
  CHECK(osc::seq::refinedColor(f, g, p) == 0);
  // Count 1: top bit position 0, decoded to (0, 0).
  CHECK(osc::seq::refinedColor({2, 5}, {3, 4}, p) == 0);
  // Count 2: top bit position 1, decoded to (1, 0).
  CHECK(osc::seq::refinedColor({1, 4, 5, 9}, {2, 3, 7, 8}, p) == 1);
  CHECK(errorCode([&] { osc::seq::refinedColor({1, 2}, {1, 2}, p); }) == "ZeroOscillation");
}

TEST_CASE("final colour case split") {
  auto p = osc::seq::cantorPairing();
  auto canon = osc::seq::RectangleEnumeration::canonical();

  // The selected rectangle's sides miss the windows: the colour defaults to 0.
  CHECK(osc::seq::finalColor({2, 5}, {3, 4}, canon, p) == 0);
  CHECK(errorCode([&] { osc::seq::finalColor({1, 2}, {1, 2}, canon, p); }) == "ZeroOscillation");

  // A seeded enumeration expecting longer windows than provided.
  auto wide = osc::seq::makeRectangle(3, {{0, 1, 2}}, {{0, 1, 3}}, {7});
  auto seeded = osc::seq::RectangleEnumeration::seeded({wide});
  CHECK(errorCode([&] { osc::seq::finalColor({2, 5}, {3, 4}, seeded, p); }) == "WindowTooShort");

  // A constructed pair that hits its rectangle reads the table value.
  auto demo = osc::seq::tableDemo({{3}});
  CHECK(osc::seq::finalColor(demo.A[0], demo.B[0], demo.enumeration, demo.pairing) == 3);
}

TEST_CASE("table demo reproduces whole targets") {
  std::vector<std::vector<Nat>> target{{1, 2}, {3, 0}};
  auto demo = osc::seq::tableDemo(target);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      CAPTURE(i);
      CAPTURE(j);
      CHECK(osc::seq::finalColor(demo.A[i], demo.B[j], demo.enumeration, demo.pairing) ==
            target[i][j]);
    }
  CHECK(errorCode([] { osc::seq::tableDemo({{4}}); }) == "OutOfRange");
}

TEST_CASE("rectangle enumeration round-trips") {
  auto e = osc::seq::RectangleEnumeration::canonical();

  osc::seq::Rectangle empty;
  CHECK(e.indexOf(empty) == 7);
  CHECK(e.at(7) == empty);
  CHECK(e.at(0) == empty);  // the zero offset decodes to nothing valid

  std::vector<osc::seq::Rectangle> rects = {
      osc::seq::makeRectangle(1, {{0}}, {{1}}, {5}),
      osc::seq::makeRectangle(1, {{0}, {2}}, {{1}}, {5, 6}),
      osc::seq::makeRectangle(2, {{0, 1}}, {{0, 2}, {1, 3}}, {0, 9}),
      osc::seq::makeRectangle(3, {{1, 2, 4}}, {{0, 3, 5}}, {2}),
  };
  std::vector<Nat> indices;
  for (const auto& r : rects) {
    Nat idx = osc::seq::rectangleIndex(r, e);
    CHECK(osc::seq::rectangleAt(e, idx) == r);
    indices.push_back(idx);
  }
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = i + 1; j < indices.size(); ++j) CHECK(indices[i] != indices[j]);

  // Seeded enumerations put the seeds first.
  auto seeded = osc::seq::RectangleEnumeration::seeded({rects[0]});
  CHECK(seeded.at(0) == rects[0]);
  CHECK(seeded.indexOf(rects[0]) == 0);

  // JSON round trip.
  auto back = osc::seq::rectangleFromJson(osc::seq::rectangleToJson(rects[2]));
  CHECK(back == rects[2]);
}

}  // namespace
