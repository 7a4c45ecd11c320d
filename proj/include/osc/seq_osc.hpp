#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osc/baire_osc.hpp"
#include "osc/errors.hpp"

// Oscillations of increasing finite sequences, the refined colouring built
// from the binary expansion of the oscillation number, and the final
// colouring through an enumeration of finite rectangles.
namespace osc::seq {

using Nat = std::uint64_t;

// Finite strictly increasing window of a sequence of naturals. This is the
// same node type the tree oracles use, so oracle output feeds the
// oscillation counters directly.
using Seq = std::vector<Nat>;
using Tree = osc::baire::TreeOracle<Nat>;

// Comma-separated naturals, ascending; empty string denotes the empty
// window. Throws ParseError on malformed or non-increasing input.
Seq parseSeq(const std::string& text);
std::string strSeq(const Seq& s);

// Number of descent positions: n with f(n) <= g(n) and f(n+1) > g(n+1).
// Strict variant: the windows must have equal length (LengthMismatch).
Nat oscSeq(const Seq& f, const Seq& g);

// Same count restricted to the common prefix of the two windows. Each
// position's contribution depends only on entries n and n+1, so extending
// either window never changes the counts at earlier positions.
Nat oscSeqPrefix(const Seq& f, const Seq& g);

// Result of growing a pair of nodes to raise their oscillation count.
//
// The oscillation bookkeeping follows the shorter-first convention: the pair
// is normalised so the first coordinate is the strictly shorter window whose
// last entry does not exceed the other window at the same position, and both
// reported counts are taken in that orientation. `swapped` records whether
// normalisation reversed the input order; `sExtension`/`tExtension` always
// extend the original s and t respectively.
struct SplitExtension {
  Seq sExtension;
  Seq tExtension;
  Nat baselineOsc = 0;  // prefix oscillation after normalisation, before counted rounds
  Nat finalOsc = 0;     // prefix oscillation of the returned pair
  bool swapped = false;
};

// Grows s in S and t in T through n rounds of the alternating
// large-extension recursion, each round adding exactly one descent, so the
// final prefix oscillation exceeds the baseline by exactly n.
//
// Inputs that do not yet satisfy the shorter-first shape are normalised
// first: equal-length pairs grow the dominating side by one step, and an
// empty shorter window is grown through one free (uncounted) round. When the
// shape cannot be established by swapping — the strictly shorter window
// already exceeds the longer one at its last position — the call fails with
// PreconditionViolated. Oracle gaps surface as OracleFailure.
SplitExtension extendSplitting(const Tree& S, const Tree& T, const Seq& s, const Seq& t, Nat n);

// A bijection between naturals and pairs of naturals.
struct PairingScheme {
  std::function<std::pair<Nat, Nat>(Nat)> decode;  // e : N -> N x N
  std::function<Nat(Nat, Nat)> encode;             // its inverse
  std::string name;
};

// Cantor pairing: encode(a, b) = (a + b)(a + b + 1)/2 + b. For every k the
// set of codes whose decoded first coordinate is k is infinite.
PairingScheme cantorPairing();

// Colour from the binary expansion: for osc(f, g) = 2^{i0} + ... + 2^{ik}
// with i0 the top bit position, returns the first coordinate of decode(i0).
// Fails with ZeroOscillation when the oscillation count is zero.
Nat refinedColor(const Seq& f, const Seq& g, const PairingScheme& p);

// A finite rectangle: a total table on D x E where D and E are sets of
// strictly increasing sequences of one common length k. Rows of D and E are
// kept sorted (lexicographically) and the table is row-major over D x E.
struct Rectangle {
  Nat k = 0;
  std::vector<Seq> D;
  std::vector<Seq> E;
  std::vector<Nat> table;  // |D| * |E| entries, row-major

  std::optional<Nat> value(const Seq& a, const Seq& b) const;
  bool operator==(const Rectangle&) const = default;
};

// Validates and canonicalises a rectangle given in any row order: sorts D
// and E, permutes the table to match, and checks that every row is strictly
// increasing of length k, rows are distinct, and the table is total.
// Fails with InvalidRectangle otherwise.
Rectangle makeRectangle(Nat k, std::vector<Seq> D, std::vector<Seq> E, std::vector<Nat> table);

// Canonical JSON form {"k": .., "D": [..], "E": [..], "t": [[i, j, value], ..]}
// with i, j indices into D and E. Parsing canonicalises via makeRectangle.
std::string rectangleToJson(const Rectangle& r);
Rectangle rectangleFromJson(const std::string& text);

// An indexed family of rectangles in which every rectangle occurs.
//
// Indices below the seed count name the seeds; every larger index decodes
// its offset as a self-delimiting bit code (Elias-gamma fields, low bits
// first) of the quadruple (k, D, E, table). Offsets that decode to nothing
// valid yield the trivial empty rectangle, so lookup is total.
struct RectangleEnumeration {
  std::vector<Rectangle> seeds;

  // Pure code-based enumeration with no seeds.
  static RectangleEnumeration canonical();
  // The given rectangles occupy the first indices, codes follow.
  static RectangleEnumeration seeded(std::vector<Rectangle> seeds);

  Rectangle at(Nat index) const;
  Nat indexOf(const Rectangle& r) const;
};

// Free-function forms of the enumeration accessors.
Rectangle rectangleAt(const RectangleEnumeration& e, Nat index);
// Index of the rectangle: its seed slot when seeded, else the offset of its
// canonical code. Fails with OutOfRange when the code does not fit the
// 64-bit index space.
Nat rectangleIndex(const Rectangle& r, const RectangleEnumeration& e);

// Final colouring: with n = refinedColor(f, g) and R the n-th rectangle,
// returns R's table value at (f restricted to R.k, g restricted to R.k) when
// both restrictions lie in R's sides, and 0 otherwise. Fails with
// ZeroOscillation when osc(f, g) = 0 and with WindowTooShort when either
// window is shorter than R.k.
Nat finalColor(const Seq& f, const Seq& g, const RectangleEnumeration& e, const PairingScheme& p);

// A realised colouring target: sequences A[i], B[j] extending fixed disjoint
// stems, an enumeration seeded with the target rectangle, and the pairing
// used, so that finalColor(A[i], B[j]) reproduces target[i][j].
struct TableDemo {
  Nat n = 0;
  Rectangle rectangle;
  RectangleEnumeration enumeration;
  PairingScheme pairing;
  std::vector<Seq> A;
  std::vector<Seq> B;
};

// Builds the demo for an n x n target with n <= 3 and values <= 3 (fails
// with OutOfRange beyond that). Stems a_i = (2i, 2i+1) and
// b_j = (2n+2j, 2n+2j+1) form the rectangle's sides; one vectorised round of
// the large-extension recursion on the full tree drives every pair (A_i, B_j)
// to oscillation exactly 1, whose refined colour selects the seeded
// rectangle.
TableDemo tableDemo(const std::vector<std::vector<Nat>>& target);

}  // namespace osc::seq
