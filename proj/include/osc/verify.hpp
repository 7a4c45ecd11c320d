#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Property suites: every module's invariants checked against independent
// oracles and recorded with replayable counterexamples. All suites are
// deterministic functions of (seed, budgets).
namespace osc::verify {

using Nat = std::uint64_t;

// Search/size knobs shared by the suites.
struct Budgets {
  Nat search = 10'000;       // witness/index searches and enumeration windows
  Nat cap = 10'000'000;      // power-search cap
  Nat truncation = 64;       // family truncation bound M
};

// A failed check, with enough input text to replay it by hand.
struct Counterexample {
  std::string property;
  std::string input;
  std::string detail;
};

// Outcome of one property: how many individual checks ran and what failed.
struct PropertyResult {
  std::string property;
  Nat checks = 0;
  std::vector<Counterexample> counterexamples;

  bool passed() const { return counterexamples.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<PropertyResult> properties;
  Budgets budgets;
  double wallSeconds = 0.0;  // measured; excluded from deterministic reports

  Nat totalChecks() const;
  std::vector<Counterexample> allCounterexamples() const;
  bool passed() const;
};

// --- finite oscillation properties ---

// oscFinite against an independent side-label block-count oracle, plus
// symmetry and the identity/run-count laws, on random pairs with elements
// below 64.
PropertyResult oscBruteForceAgreement(Nat seed, Nat pairs);
// Depth-k realization over the canonical family with M = 8k for k = 1..maxK:
// certificate validation, then pair and triple value maps covering all of
// {1, ..., 2k-1} with membership and independently recomputed values.
PropertyResult derivativeChainRealization(Nat maxK);
// Padding all three sets with a common block of large elements never changes
// the triple oscillation.
PropertyResult oscTripleLocality(Nat seed, Nat triples, Nat padCount);
// Truncated-derivative membership on an explicit list family and on
// canonical families truncated at elementBound.
PropertyResult derivativeExamples(Nat elementBound);

// --- Baire oscillation properties ---

// realizeBits then oscInfinite reproduces random bit targets as a prefix.
PropertyResult realizeBitsRoundTrip(Nat seed, Nat targets, Nat bits);
// Truncating the x-window only truncates the bit string (window growth never
// rewrites earlier bits).
PropertyResult oscWindowStability(Nat seed, Nat cases);
// The same bits arise when the index domain is relabelled order-isomorphically
// into ordinals below omega^2.
PropertyResult ordinalParametricity(Nat seed, Nat cases);
// superperfectImage outputs are strictly increasing, every step's index is
// minimal, and every reported delta is a true first disagreement.
PropertyResult superperfectMonotone(Nat seed, Nat streams, Nat steps);
// Every image-tree node of depth < 4 over an embedded perfect tree extends
// with arbitrarily large next values: witness streams found for a 13-value
// bound window per node.
PropertyResult imageSplittingWitness(Nat indexBudget);

// --- sequence oscillation properties ---

// extendSplitting raises the oscillation by exactly n (independent recount).
PropertyResult extendSplittingExactness(Nat seed, Nat cases);
// Appending a common tail beyond the window never changes counted crossings.
PropertyResult seqWindowStability(Nat seed, Nat cases);
// tableDemo hits every 1x1 and 2x2 target exactly and a sample of 3x3 ones.
PropertyResult tableDemoAllTargets(Nat seed);
// refinedColor depends only on the top bit of the oscillation count.
PropertyResult refinedColorStability(Nat seed, Nat cases);
// Cantor pairing round trips and has infinite first-coordinate fibers.
PropertyResult pairingRoundTrip(Nat seed);
// Rectangle index/JSON round trips, seeded and canonical.
PropertyResult rectangleRoundTrip(Nat seed, Nat cases);

// --- ordinal walk properties ---

// Parse/format round trip, total order laws, successor classification,
// addition associativity and left difference.
PropertyResult ordinalOrderProperties(Nat seed, Nat cases);
// Ladders are strictly increasing and cofinal on sampled limits; successor
// ladders are the one-element ones.
PropertyResult ladderSoundness(Nat seed);
// Walk termination/shape, lower-trace monotonicity, the oscillation bound,
// and the frozen walk examples.
PropertyResult walkProperties(Nat seed, Nat cases);
// Frozen e-values, including the overridden-ladder disagreement example.
PropertyResult eFrozenValues();
// Trace concatenation over all hypothesis-satisfying triples from a fixed
// sample below omega^3: zero counterexamples expected.
PropertyResult traceConcatenationSampled(Nat seed, Nat sampleSize);
// Lower-trace minima eventually exceed every fixed gamma: per-gamma
// thresholds over ascending alpha samples for beta in {w, w^2, w*3}.
PropertyResult traceMinThresholds();
// Value preimages (v <= 20) of the weight system agree between a small and a
// large enumeration window for beta in {w^2, w^2+w, w^3}.
PropertyResult eStabilization(Nat smallBudget, Nat largeBudget);
// Coherence: the disagreement set of e_alpha vs e_beta inside the window
// stops growing between the two budgets, for sampled pairs below omega^3.
PropertyResult coherenceStabilization(Nat smallBudget, Nat largeBudget);
// Consecutive-value run search: shape, witnesses recomputed independently.
PropertyResult oscRunSearch(Nat seed);

// --- circle colouring properties ---

// (z^a)^b = z^(ab) exactly for a, b <= 1000; powers stay on the unit circle.
PropertyResult anglePowerExactness(Nat seed, Nat cases);
// No nonzero integer vector with |n_i| <= 5 over an 8-point session sums to
// the zero angle; exhaustive, with sampled full-arithmetic cross-checks.
PropertyResult independenceExhaustive();
// Frozen power-search value, post-hoc distance checks, minimality rescans,
// and cap behaviour.
PropertyResult kroneckerChecks();
// Sampled point-family coordinates lie on the unit circle within 1e-9 and
// the CSV emission is well formed.
PropertyResult unitCircleResidence(Nat seed);
// Pair-colour conventions: unit at xi = 0 and xi >= beta, decomposition into
// base power, and the error contracts.
PropertyResult colorConventions();
// Neighbourhood search: full-circle targets hit the first admissible pair,
// impossible targets exhaust with a correct nearest miss, caps are honoured.
PropertyResult neighborhoodSearchSmoke(Nat seed);

// --- assembly ---

// Suite names accepted by runSuite, in canonical order (excluding "all").
const std::vector<std::string>& suiteNames();

// Runs one named suite ("finite", "baire", "seq", "walks", "lspace") or
// "all". Fails with UnknownSuite for anything else. Deterministic in
// (name, seed, budgets) apart from wallSeconds.
SuiteReport runSuite(const std::string& name, Nat seed, const Budgets& budgets);

}  // namespace osc::verify
