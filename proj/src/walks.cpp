#include "osc/walks.hpp"

#include <algorithm>
#include <limits>

namespace osc::walks {

namespace {

constexpr Nat kOverrideScanCap = 1'000'000;

// Standard ladder assignment, before the 0 is prepended. Pre: lambda limit.
Ordinal rawElement(const Ordinal& lambda, Nat n) {
  std::vector<Ordinal::Term> head(lambda.terms().begin(), lambda.terms().end());
  Ordinal a = head.back().exponent;  // >= 1 since lambda is a limit
  if (head.back().coeff >= 2)
    --head.back().coeff;  // peel one copy of the last term
  else
    head.pop_back();
  Ordinal gamma = Ordinal::fromTerms(std::move(head));
  if (a.isSuccessor()) {
    if (n == 0) return gamma;
    return gamma.add(Ordinal::omegaPow(a.pred(), n));
  }
  return gamma.add(Ordinal::omegaPow(rawElement(a, n)));  // exponent ladder
}

// Ladder element with the prepended 0 — unless the standard ladder already
// starts at 0, in which case no duplicate is inserted.
Ordinal publicElement(const Ordinal& lambda, Nat n) {
  if (rawElement(lambda, 0).isZero()) return rawElement(lambda, n);
  if (n == 0) return Ordinal();
  return rawElement(lambda, n - 1);
}

}  // namespace

Ordinal fundamental(const Ordinal& lambda, Nat n) {
  if (!lambda.isLimit()) fail("NotLimit", "ladders index only limit ordinals");
  return publicElement(lambda, n);
}

CSequence CSequence::canonical() { return CSequence(Override{}, "canonical"); }

CSequence CSequence::withOverride(Override override, std::string name) {
  return CSequence(std::move(override), std::move(name));
}

Ordinal CSequence::element(const Ordinal& alpha, Nat n) const {
  if (alpha.isZero()) fail("OutOfRange", "zero has no ladder");
  if (alpha.isSuccessor()) {
    if (n != 0) fail("OutOfRange", "a successor's ladder has a single element");
    return alpha.pred();
  }
  if (override_ && override_(alpha, 0)) {
    auto v = override_(alpha, n);
    if (!v) fail("OracleFailure", "override ladder for " + alpha.str() + " ends at index " +
                                      std::to_string(n));
    return *v;
  }
  return publicElement(alpha, n);
}

StepInfo CSequence::step(const Ordinal& alpha, const Ordinal& target) const {
  if (alpha.isZero() || target >= alpha)
    fail("OutOfRange", "ladder step needs target < alpha and alpha nonzero");
  if (alpha.isSuccessor()) {
    // C = {alpha - 1}, and target < alpha means target <= alpha - 1.
    return StepInfo{alpha.pred(), 0, std::nullopt};
  }
  if (override_ && override_(alpha, 0)) {
    StepInfo out;
    for (Nat i = 0; i < kOverrideScanCap; ++i) {
      auto v = override_(alpha, i);
      if (!v)
        fail("OracleFailure", "override ladder for " + alpha.str() + " ends below the target");
      if (*v >= target) {
        out.minAtLeast = *v;
        return out;
      }
      out.maxBelow = *v;
      ++out.countBelow;
    }
    fail("OracleFailure", "override ladder scan cap reached before the target");
  }
  // Canonical ladders are strictly increasing: locate the least index whose
  // element reaches the target by doubling, then bisect.
  if (publicElement(alpha, 0) >= target) return StepInfo{publicElement(alpha, 0), 0, std::nullopt};
  Nat lo = 0;  // element(lo) < target
  Nat hi = 1;
  while (publicElement(alpha, hi) < target) {
    lo = hi;
    if (hi > (std::numeric_limits<Nat>::max() >> 1))
      fail("OutOfRange", "ladder search exhausted the index space");
    hi <<= 1;
  }
  while (hi - lo > 1) {
    Nat mid = lo + (hi - lo) / 2;
    (publicElement(alpha, mid) < target ? lo : hi) = mid;
  }
  StepInfo out;
  out.minAtLeast = publicElement(alpha, hi);
  out.countBelow = hi;
  out.maxBelow = publicElement(alpha, hi - 1);
  return out;
}

WalkRecord walk(const Ordinal& alpha, const Ordinal& beta, const CSequence& C) {
  if (alpha.isZero() || alpha > beta) fail("OutOfRange", "walks need 1 <= alpha <= beta");
  WalkRecord rec;
  rec.upperTrace.push_back(beta);
  Ordinal current = beta;
  std::optional<Ordinal> best;  // max of the union of ladder points below alpha
  while (current != alpha) {
    StepInfo st = C.step(current, alpha);
    if (st.maxBelow && (!best || *best < *st.maxBelow)) best = *st.maxBelow;
    if (best) rec.lowerTrace.push_back(*best);
    if (st.minAtLeast >= current)
      fail("OracleFailure", "ladder element not below its ordinal; walk cannot descend");
    current = st.minAtLeast;
    rec.upperTrace.push_back(current);
  }
  return rec;
}

Nat ESystem::value(const Ordinal& beta, const Ordinal& xi) const {
  if (xi >= beta) fail("OutOfRange", "weight e(beta, xi) needs xi < beta");
  std::lock_guard<std::mutex> lock(mutex_);
  std::function<Nat(const Ordinal&)> rho = [&](const Ordinal& b) -> Nat {
    if (b == xi) return 0;
    auto key = std::make_pair(b, xi);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    StepInfo st = C_.step(b, xi);
    Nat v = std::max(st.countBelow, rho(st.minAtLeast));
    memo_.emplace(std::move(key), v);
    return v;
  };
  return rho(beta);
}

Nat eValue(const ESystem& sys, const Ordinal& beta, const Ordinal& xi) {
  return sys.value(beta, xi);
}

namespace {

// New elements of shell H below alpha: CNF sums of one to three terms with
// natural exponents and coefficients bounded by H, where the bound H is
// attained. Shell 0 is {0}. Two prunings keep the cost near the output size:
// a prefix is a sum all of whose extensions are at least as large, and
// raising a coefficient also only increases the sum, so a branch whose
// prefix reaches alpha is dead and its coefficient loop can stop; and when
// no exponent or earlier coefficient attains H, the final coefficient must
// be exactly H, so the other values need not be visited at all.
std::vector<Ordinal> shellNew(Nat H, const Ordinal& alpha) {
  std::vector<Ordinal> batch;
  Nat eCap = H;
  if (!alpha.terms().empty() && alpha.terms().front().exponent.isFinite())
    eCap = std::min(H, alpha.terms().front().exponent.finiteValue());

  std::vector<Nat> exps;
  std::vector<Ordinal::Term> terms;
  auto overCoeffs = [&](auto&& self, std::size_t i, bool attained) -> void {
    if (i == exps.size()) {
      std::vector<Ordinal::Term> copy = terms;
      batch.push_back(Ordinal::fromTerms(std::move(copy)));
      return;
    }
    auto tryCoeff = [&](Nat c, bool nowAttained) -> bool {
      terms.push_back({Ordinal::nat(exps[i]), c});
      std::vector<Ordinal::Term> copy = terms;
      bool viable = Ordinal::fromTerms(std::move(copy)) < alpha;
      if (viable) self(self, i + 1, nowAttained);
      terms.pop_back();
      return viable;
    };
    if (!attained && i + 1 == exps.size()) {
      tryCoeff(H, true);
      return;
    }
    for (Nat c = 1; c <= H; ++c)
      if (!tryCoeff(c, attained || c == H)) break;
  };
  auto run = [&] {
    Nat expTop = 0;
    for (Nat e : exps) expTop = std::max(expTop, e);
    overCoeffs(overCoeffs, 0, expTop == H);
  };

  for (Nat e0 = 0; e0 <= eCap; ++e0) {
    exps = {e0};
    run();
    for (Nat e1 = 0; e1 < e0; ++e1) {
      exps = {e0, e1};
      run();
      for (Nat e2 = 0; e2 < e1; ++e2) {
        exps = {e0, e1, e2};
        run();
      }
    }
  }
  return batch;
}

}  // namespace

std::vector<Ordinal> canonicalEnumerateBelow(const Ordinal& alpha, Nat budget) {
  std::vector<Ordinal> out;
  if (budget == 0 || alpha.isZero()) return out;
  out.push_back(Ordinal());
  for (Nat H = 1; out.size() < budget; ++H) {
    std::vector<Ordinal> batch = shellNew(H, alpha);
    if (batch.empty()) break;  // alpha is finite and exhausted
    std::sort(batch.begin(), batch.end());
    for (Ordinal& x : batch) {
      out.push_back(std::move(x));
      if (out.size() == budget) break;
    }
  }
  return out;
}

DeltaResult deltaOrdinal(const ESystem& sys, const Ordinal& alpha, const Ordinal& beta,
                         Nat searchBudget) {
  if (alpha >= beta) fail("OutOfRange", "delta search needs alpha < beta");
  std::vector<Ordinal> window = canonicalEnumerateBelow(alpha, searchBudget);
  DeltaResult res;
  res.examined = window.size();
  for (const Ordinal& xi : window)
    if (sys.value(alpha, xi) != sys.value(beta, xi))
      if (!res.witness || xi < *res.witness) res.witness = xi;
  return res;
}

OscOrdinalResult oscOrdinal(const ESystem& sys, const Ordinal& alpha, const Ordinal& beta,
                            const CSequence& C) {
  if (alpha.isZero() || alpha >= beta) fail("OutOfRange", "oscillation needs 1 <= alpha < beta");
  std::vector<Ordinal> L = walk(alpha, beta, C).lowerTrace;
  L.erase(std::unique(L.begin(), L.end()), L.end());  // nondecreasing -> sorted set
  OscOrdinalResult out;
  for (std::size_t i = 0; i + 1 < L.size(); ++i) {
    bool riseHere = sys.value(alpha, L[i]) <= sys.value(beta, L[i]);
    bool dropNext = sys.value(alpha, L[i + 1]) > sys.value(beta, L[i + 1]);
    if (riseHere && dropNext) {
      ++out.value;
      out.oscSet.push_back(L[i]);
    }
  }
  return out;
}

ConcatVerdict traceConcat(const Ordinal& alpha, const Ordinal& beta, const Ordinal& gamma,
                          const CSequence& C) {
  if (alpha.isZero() || alpha > beta || beta > gamma)
    fail("OutOfRange", "trace concatenation needs 1 <= alpha <= beta <= gamma");
  std::vector<Ordinal> lab = walk(alpha, beta, C).lowerTrace;
  std::vector<Ordinal> lbg = walk(beta, gamma, C).lowerTrace;
  if (lab.empty() || lbg.empty())
    fail("OutOfRange", "trace concatenation needs both lower traces nonempty");
  ConcatVerdict verdict;
  verdict.hypothesisHolds = lbg.back() < lab.front();
  if (!verdict.hypothesisHolds) return verdict;
  auto asSet = [](std::vector<Ordinal> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  std::vector<Ordinal> unionSet = lab;
  unionSet.insert(unionSet.end(), lbg.begin(), lbg.end());
  verdict.conclusionHolds = asSet(walk(alpha, gamma, C).lowerTrace) == asSet(std::move(unionSet));
  return verdict;
}

OscRunReport searchOscRun(const std::vector<Ordinal>& A, const std::vector<Ordinal>& B, Nat n,
                          const ESystem& sys, const CSequence& C) {
  OscRunReport report;
  report.requested = n;
  if (n == 0) return report;
  for (const Ordinal& alpha : A) {
    if (alpha.isZero()) continue;
    std::map<Nat, Ordinal> witnesses;  // oscillation value -> first beta realizing it
    for (const Ordinal& beta : B)
      if (alpha < beta) witnesses.emplace(oscOrdinal(sys, alpha, beta, C).value, beta);
    // Longest run of consecutive values, capped at the requested length.
    Nat runLen = 0;
    bool started = false;
    Nat prev = 0;
    for (const auto& [value, beta] : witnesses) {
      if (!started || value != prev + 1)
        runLen = 1;
      else
        ++runLen;
      started = true;
      prev = value;
      Nat effective = std::min(runLen, n);
      if (effective > report.length) {
        report.length = effective;
        report.alpha = alpha;
        report.startValue = value + 1 - effective;
        report.betas.clear();
        for (Nat v = report.startValue; v <= value; ++v) report.betas.push_back(witnesses.at(v));
      }
    }
  }
  return report;
}

}  // namespace osc::walks
