#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "osc/errors.hpp"

namespace osc::finite {

using Nat = std::uint64_t;

// A finite set of naturals, stored as a strictly increasing element vector.
class FiniteNatSet {
 public:
  FiniteNatSet() = default;
  explicit FiniteNatSet(std::vector<Nat> elements);  // sorts and removes duplicates
  FiniteNatSet(std::initializer_list<Nat> elements);

  // Text form: comma-separated ascending naturals; the empty string is the
  // empty set. Rejects non-ascending input with ParseError.
  static FiniteNatSet parse(std::string_view text);
  std::string str() const;

  const std::vector<Nat>& elements() const { return elems_; }
  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(Nat n) const;
  Nat max() const;  // pre: nonempty

  FiniteNatSet initialSegment(Nat n) const;  // elements < n
  FiniteNatSet unionWith(const FiniteNatSet& other) const;
  FiniteNatSet withElement(Nat n) const;
  FiniteNatSet minus(const FiniteNatSet& other) const;

  // True iff this is a proper initial segment of other in the tree ordering:
  // other extends this and every new element lies above max(this).
  bool properInitialSegmentOf(const FiniteNatSet& other) const;

  bool operator==(const FiniteNatSet& other) const { return elems_ == other.elems_; }
  bool operator!=(const FiniteNatSet& other) const { return elems_ != other.elems_; }
  bool operator<(const FiniteNatSet& other) const { return elems_ < other.elems_; }

 private:
  std::vector<Nat> elems_;
};

struct FiniteNatSetHash {
  std::size_t operator()(const FiniteNatSet& s) const noexcept;
};

// Number of maximal runs of consecutive integers in the set.
Nat countRuns(const FiniteNatSet& s);

// Oscillation of two finite sets: the number of equivalence classes of the
// symmetric difference, where n ~ m iff the whole integer interval [n, m]
// lies inside s∖t or inside t∖s. Equal sets give 0.
Nat oscFinite(const FiniteNatSet& s, const FiniteNatSet& t);

// Least element of the symmetric difference. Throws EqualSets when s == t.
Nat deltaPair(const FiniteNatSet& s, const FiniteNatSet& t);

// Least n at which the three initial segments s∩(n+1), t∩(n+1), u∩(n+1) are
// pairwise distinct; equals the maximum of the pairwise deltaPair values.
// Throws NotDistinct unless s, t, u are pairwise distinct.
Nat deltaTriple(const FiniteNatSet& s, const FiniteNatSet& t, const FiniteNatSet& u);

// Triple oscillation: with n = deltaTriple(s,t,u), the traces s∩n, t∩n, u∩n
// form exactly two distinct sets {v, w}; the value is oscFinite(v, w).
Nat oscTriple(const FiniteNatSet& s, const FiniteNatSet& t, const FiniteNatSet& u);

// Membership oracle for a family of finite sets, truncated at an element
// bound M (inclusive: witnesses may use elements up to and including M).
// Families are either intensional (a predicate, total on sets with elements
// <= M) or carry an explicit member list enabling complete closure scans.
class FamilyOracle {
 public:
  using Pred = std::function<bool(const FiniteNatSet&)>;

  // All sets of size <= maxSize (any elements), truncated at M.
  static FamilyOracle canonical(Nat maxSize, Nat elementBound);
  // Explicit finite family; the element bound is the largest member element.
  static FamilyOracle fromList(std::vector<FiniteNatSet> members);
  static FamilyOracle fromPredicate(Pred member, Nat elementBound,
                                    std::string description = "predicate",
                                    Nat witnessArity = 2);

  bool member(const FiniteNatSet& s) const;
  Nat elementBound() const;
  // Non-null for explicit families (sorted member list).
  const std::vector<FiniteNatSet>* list() const;
  // Intensional closure checks try extensions s ∪ w with |w| <= witnessArity.
  Nat witnessArity() const;
  const std::string& description() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  explicit FamilyOracle(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
};

// Descriptor grammar: "canonical:k=<int>,M=<int>" or "explicit:<path>" where
// the file holds one set per line (empty line = empty set).
FamilyOracle parseFamilyDescriptor(const std::string& descriptor);

// True iff s is a limit of X∖{s} within the truncation: for every n with
// sup(s) < n <= elementBound there is a member t ≠ s with t∩n = s. The
// witness must differ from s (limit-point semantics; this is what the
// derivative uses). For intensional families the witness search is budgeted
// by witnessArity; explicit families are scanned completely.
bool inClosure(const FiniteNatSet& s, const FamilyOracle& X);

// k-fold Cantor–Bendixson-style derivative within the truncation:
// delta(X) = { s in X : inClosure(s, X) }.
FamilyOracle truncatedDerivative(const FamilyOracle& X, Nat k);

// Explicit record of the choices made by the depth-k realization argument:
// two chains root = t_0 ⊏ t_1 ⊏ … ⊏ t_k and root = u_0 ⊏ u_1 ⊏ … ⊏ u_k with
// interleaved new blocks t_i∖t_{i−1} < u_i∖u_{i−1} < t_{i+1}∖t_i.
struct DerivativeCertificate {
  FiniteNatSet root;
  Nat depth = 0;
  std::vector<FiniteNatSet> tChain;  // t_0..t_k
  std::vector<FiniteNatSet> uChain;  // u_0..u_k
};

// Certificate over the canonical size-k family with singleton blocks
// t_i gains {2(i−1)}, u_i gains {2i−1}; every witness has size <= k <= M.
DerivativeCertificate canonicalCertificate(Nat k, Nat M);

// Throws InvalidCertificate when a witness fails membership in X, a chain is
// not a proper initial-segment chain, or the block interleaving fails.
void validateCertificate(const FamilyOracle& X, const DerivativeCertificate& cert);

// For each v in {1, …, 2k−1} a pair of members of X with oscFinite == v,
// assembled from the certificate chains (even 2j from (t_j, u_j); odd 2j+1
// from (t_{j+1}, u_j)). Values are re-verified; any mismatch throws
// InvalidCertificate.
std::map<Nat, std::pair<FiniteNatSet, FiniteNatSet>> realizeOscillations(
    const FamilyOracle& X, const DerivativeCertificate& cert);

// Triple analogue: even 2j from (t_j, t_{j+1}, u_j); odd 2j+1 from
// (t_{j+1}, u_j, u_{j+1}); values re-verified with oscTriple.
std::map<Nat, std::array<FiniteNatSet, 3>> realizeOscTriple(
    const FamilyOracle& X, const DerivativeCertificate& cert);

}  // namespace osc::finite
