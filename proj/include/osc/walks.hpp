#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "osc/errors.hpp"
#include "osc/ordinal.hpp"

// Walks on ordinals below epsilon_0: ladders (C-sequences), upper and lower
// traces, the finite-to-one weight system e, Delta search, and the
// oscillation of two weight functions along a lower trace.
namespace osc::walks {

using Nat = std::uint64_t;
using osc::ord::Ordinal;

// n-th element of a limit ordinal's canonical ladder, with 0 prepended.
//
// The canonical assignment: for lambda = gamma + w^(a+1), the ladder runs
// gamma + w^a * n; for lambda = gamma + w^a with a a limit, it runs
// gamma + w^(a[n]) over a's own ladder; a trailing coefficient c >= 2 peels
// one copy. Index 0 returns the prepended 0; index n+1 returns the n-th
// standard element — except that when the standard ladder already starts at
// 0 (only for lambda = w) no extra 0 is inserted. Strictly increasing in n,
// every value below lambda, and cofinal in lambda. Fails with NotLimit on
// zero or successor input.
Ordinal fundamental(const Ordinal& lambda, Nat n);

// What a walk or weight recursion needs to know about one ladder, relative
// to a target ordinal below the ladder's owner.
struct StepInfo {
  Ordinal minAtLeast;               // least ladder element >= target
  Nat countBelow = 0;               // number of ladder elements < target
  std::optional<Ordinal> maxBelow;  // greatest ladder element < target, when any
};

// A system of ladders: each successor xi+1 owns the one-element ladder {xi},
// each limit owns its canonical ladder — unless an override supplies the
// whole ladder for that ordinal.
//
// An override maps (lambda, n) to the n-th ladder element or nullopt. It is
// probed at n = 0: a value there means the override owns lambda's entire
// ladder (which must be strictly increasing and cofinal in lambda); nullopt
// means lambda is fully canonical. Mixed per-index overriding is not
// supported.
class CSequence {
 public:
  using Override = std::function<std::optional<Ordinal>(const Ordinal&, Nat)>;

  static CSequence canonical();
  static CSequence withOverride(Override override, std::string name);

  // n-th ladder element of a nonzero ordinal. Successors only admit n = 0
  // (OutOfRange beyond); limits admit every n.
  Ordinal element(const Ordinal& alpha, Nat n) const;

  // Ladder facts relative to a target < alpha's supremum: pre target < alpha
  // and alpha nonzero (OutOfRange otherwise). Overridden ladders are scanned
  // linearly and fail with OracleFailure if the target is not reached within
  // the scan cap.
  StepInfo step(const Ordinal& alpha, const Ordinal& target) const;

  const std::string& name() const { return name_; }

 private:
  CSequence(Override override, std::string name)
      : override_(std::move(override)), name_(std::move(name)) {}

  Override override_;  // empty function = fully canonical
  std::string name_;
};

// One walk from beta down to alpha.
struct WalkRecord {
  // beta = beta_0 > beta_1 > ... > beta_l = alpha, each step taking the
  // least ladder element of the current ordinal that is >= alpha.
  std::vector<Ordinal> upperTrace;
  // xi_k = max of the union over j <= k of (C_{beta_j} cut below alpha);
  // recorded from the first step whose union is nonempty (earlier steps from
  // successors contribute nothing below alpha). Nondecreasing.
  std::vector<Ordinal> lowerTrace;
};

// Walks from beta to alpha. Pre: 1 <= alpha <= beta (OutOfRange otherwise).
// alpha = beta yields the trivial record {beta} with empty lower trace.
WalkRecord walk(const Ordinal& alpha, const Ordinal& beta, const CSequence& C);

// The weight system e(beta, xi) for xi < beta, realized by the recursion
//   rho(xi, beta) = max(|C_beta below xi|, rho(xi, least C_beta element >= xi))
// bottoming out at rho(xi, xi) = 0. Finite-to-one in xi on every window and
// coherent across beta up to finite disagreement; the verification suite
// tests both on enumerated windows. Evaluations are memoized; the cache is
// synchronized, so one instance may be shared across threads.
class ESystem {
 public:
  explicit ESystem(CSequence C) : C_(std::move(C)) {}

  // e(beta, xi). Pre: xi < beta (OutOfRange otherwise).
  Nat value(const Ordinal& beta, const Ordinal& xi) const;

  const CSequence& ladder() const { return C_; }

 private:
  CSequence C_;
  mutable std::map<std::pair<Ordinal, Ordinal>, Nat> memo_;
  mutable std::mutex mutex_;
};

// Free-function form of ESystem::value.
Nat eValue(const ESystem& sys, const Ordinal& beta, const Ordinal& xi);

// Deterministic enumeration of ordinals below alpha, at most budget items.
//
// Ordinals are grouped into nested shells: shell H holds sums of at most
// three terms w^e * c with natural exponents e <= H and coefficients c <= H.
// The enumeration lists 0, then each shell's new elements in increasing
// order; below w it is exactly 0, 1, 2, .... Larger budgets extend smaller
// ones, and the enumeration stops early once no shell contributes below a
// finite alpha. Ordinals with infinite exponents (at or above w^w) lie
// outside every shell; the enumeration is a window, not a certificate.
std::vector<Ordinal> canonicalEnumerateBelow(const Ordinal& alpha, Nat budget);

// Least disagreement of e(alpha, .) and e(beta, .) below alpha, searched
// over the canonical enumeration.
struct DeltaResult {
  std::optional<Ordinal> witness;  // least disagreement point found, if any
  Nat examined = 0;                // enumeration items actually checked
};

// Pre: alpha < beta (OutOfRange otherwise). A missing witness only reports
// absence within the examined window; it does not certify agreement.
DeltaResult deltaOrdinal(const ESystem& sys, const Ordinal& alpha, const Ordinal& beta,
                         Nat searchBudget);

// Oscillation of the two weight functions along the lower trace of
// walk(alpha, beta): the number of trace points (taken as a set, in
// increasing order) where e_alpha <= e_beta holds and fails at the next
// point. oscSet lists the witnessing points.
struct OscOrdinalResult {
  Nat value = 0;
  std::vector<Ordinal> oscSet;
};

// Pre: 1 <= alpha < beta (OutOfRange otherwise). Singleton or empty traces
// yield (0, {}); the value never exceeds max(0, |trace| - 1).
OscOrdinalResult oscOrdinal(const ESystem& sys, const Ordinal& alpha, const Ordinal& beta,
                            const CSequence& C);

// Lower-trace concatenation check for alpha <= beta <= gamma: when every
// point of L(beta, gamma) lies below every point of L(alpha, beta), the walk
// from gamma to alpha passes through beta and L(alpha, gamma) is exactly the
// union. Pre: 1 <= alpha <= beta <= gamma and both constituent traces
// nonempty (OutOfRange otherwise).
struct ConcatVerdict {
  bool hypothesisHolds = false;
  // Set only when the hypothesis holds.
  std::optional<bool> conclusionHolds;
};

ConcatVerdict traceConcat(const Ordinal& alpha, const Ordinal& beta, const Ordinal& gamma,
                          const CSequence& C);

// Best run of consecutive oscillation values found in a finite sample:
// one alpha from A and witnesses beta_0, ..., beta_{r-1} from B (each above
// alpha) with oscillation values k0, k0 + 1, ..., k0 + r - 1. Best effort:
// r is capped by the requested n and may fall short of it.
struct OscRunReport {
  Nat requested = 0;
  Nat length = 0;                 // r, the run length achieved
  std::optional<Ordinal> alpha;   // unset when no pair was admissible
  Nat startValue = 0;             // k0
  std::vector<Ordinal> betas;     // witnesses, one per run value
};

OscRunReport searchOscRun(const std::vector<Ordinal>& A, const std::vector<Ordinal>& B, Nat n,
                          const ESystem& sys, const CSequence& C);

}  // namespace osc::walks
