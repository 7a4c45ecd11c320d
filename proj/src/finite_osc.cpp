#include "osc/finite_osc.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <mutex>
#include <sstream>
#include <unordered_map>

namespace osc::finite {

namespace {

std::string_view trimView(std::string_view v) {
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.remove_prefix(1);
  while (!v.empty() && std::isspace(static_cast<unsigned char>(v.back()))) v.remove_suffix(1);
  return v;
}

Nat parseNat(std::string_view token, const char* what) {
  token = trimView(token);
  if (token.empty()) fail("ParseError", std::string("empty ") + what);
  Nat value = 0;
  for (char c : token) {
    if (c < '0' || c > '9') fail("ParseError", std::string("bad ") + what + ": '" + std::string(token) + "'");
    Nat digit = static_cast<Nat>(c - '0');
    if (value > (UINT64_MAX - digit) / 10) fail("ParseError", std::string(what) + " overflows");
    value = value * 10 + digit;
  }
  return value;
}

}  // namespace

FiniteNatSet::FiniteNatSet(std::vector<Nat> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

FiniteNatSet::FiniteNatSet(std::initializer_list<Nat> elements)
    : FiniteNatSet(std::vector<Nat>(elements)) {}

FiniteNatSet FiniteNatSet::parse(std::string_view text) {
  text = trimView(text);
  if (text.empty()) return FiniteNatSet{};
  std::vector<Nat> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view token =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    Nat value = parseNat(token, "set element");
    if (!out.empty() && value <= out.back())
      fail("ParseError", "set elements must be strictly ascending near '" + std::string(token) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return FiniteNatSet(std::move(out));
}

std::string FiniteNatSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out;
}

bool FiniteNatSet::contains(Nat n) const {
  return std::binary_search(elems_.begin(), elems_.end(), n);
}

Nat FiniteNatSet::max() const {
  if (elems_.empty()) fail("OutOfRange", "max() of empty set");
  return elems_.back();
}

FiniteNatSet FiniteNatSet::initialSegment(Nat n) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), n);
  FiniteNatSet out;
  out.elems_.assign(elems_.begin(), it);
  return out;
}

FiniteNatSet FiniteNatSet::unionWith(const FiniteNatSet& other) const {
  FiniteNatSet out;
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                 std::back_inserter(out.elems_));
  return out;
}

FiniteNatSet FiniteNatSet::withElement(Nat n) const {
  return unionWith(FiniteNatSet{n});
}

FiniteNatSet FiniteNatSet::minus(const FiniteNatSet& other) const {
  FiniteNatSet out;
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(), other.elems_.end(),
                      std::back_inserter(out.elems_));
  return out;
}

bool FiniteNatSet::properInitialSegmentOf(const FiniteNatSet& other) const {
  if (size() >= other.size()) return false;
  if (!std::equal(elems_.begin(), elems_.end(), other.elems_.begin())) return false;
  // Sorted storage already guarantees the new elements sit above max(this).
  return true;
}

std::size_t FiniteNatSetHash::operator()(const FiniteNatSet& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Nat e : s.elements()) {
    h ^= static_cast<std::size_t>(e + 0x9e3779b97f4a7c15ull);
    h *= 1099511628211ull;
  }
  return h;
}

Nat countRuns(const FiniteNatSet& s) {
  const auto& e = s.elements();
  Nat runs = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (i == 0 || e[i] > e[i - 1] + 1) ++runs;
  return runs;
}

Nat oscFinite(const FiniteNatSet& s, const FiniteNatSet& t) {
  // Tagged merge of the symmetric difference; a class is a maximal run of
  // consecutive integers staying on one side.
  const auto& a = s.elements();
  const auto& b = t.elements();
  std::size_t i = 0, j = 0;
  Nat classes = 0;
  bool have_prev = false;
  Nat prev_val = 0;
  int prev_side = -1;
  auto emit = [&](Nat value, int side) {
    if (!have_prev || side != prev_side || value > prev_val + 1) ++classes;
    have_prev = true;
    prev_val = value;
    prev_side = side;
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      emit(a[i], 0);
      ++i;
    } else if (i == a.size() || b[j] < a[i]) {
      emit(b[j], 1);
      ++j;
    } else {  // common element: not in the symmetric difference
      ++i;
      ++j;
    }
  }
  return classes;
}

Nat deltaPair(const FiniteNatSet& s, const FiniteNatSet& t) {
  const auto& a = s.elements();
  const auto& b = t.elements();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else {
      return std::min(a[i], b[j]);
    }
  }
  if (i < a.size()) return a[i];
  if (j < b.size()) return b[j];
  fail("EqualSets", "delta of equal sets '" + s.str() + "'");
}

Nat deltaTriple(const FiniteNatSet& s, const FiniteNatSet& t, const FiniteNatSet& u) {
  if (s == t || s == u || t == u)
    fail("NotDistinct", "triple delta needs pairwise distinct sets");
  return std::max({deltaPair(s, t), deltaPair(s, u), deltaPair(t, u)});
}

Nat oscTriple(const FiniteNatSet& s, const FiniteNatSet& t, const FiniteNatSet& u) {
  Nat n = deltaTriple(s, t, u);
  std::array<FiniteNatSet, 3> traces = {s.initialSegment(n), t.initialSegment(n),
                                        u.initialSegment(n)};
  std::sort(traces.begin(), traces.end());
  auto last = std::unique(traces.begin(), traces.end());
  auto distinct = static_cast<std::size_t>(last - traces.begin());
  // Below the last pairwise-separating point exactly two traces survive.
  if (distinct != 2)
    fail("NotDistinct", "trace count " + std::to_string(distinct) + " at split point");
  return oscFinite(traces[0], traces[1]);
}

struct FamilyOracle::Impl {
  Pred pred;
  std::optional<std::vector<FiniteNatSet>> members;  // sorted when present
  Nat bound = 0;
  Nat arity = 2;
  std::string desc;
};

FamilyOracle FamilyOracle::canonical(Nat maxSize, Nat elementBound) {
  auto impl = std::make_shared<Impl>();
  impl->pred = [maxSize](const FiniteNatSet& s) { return s.size() <= maxSize; };
  impl->bound = elementBound;
  impl->arity = 1;  // size families grow one element at a time
  impl->desc = "canonical:k=" + std::to_string(maxSize) + ",M=" + std::to_string(elementBound);
  return FamilyOracle(std::move(impl));
}

FamilyOracle FamilyOracle::fromList(std::vector<FiniteNatSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto impl = std::make_shared<Impl>();
  Nat bound = 0;
  for (const auto& m : members)
    if (!m.empty()) bound = std::max(bound, m.max());
  impl->members = std::move(members);
  impl->bound = bound;
  impl->desc = "explicit[" + std::to_string(impl->members->size()) + "]";
  impl->pred = {};
  return FamilyOracle(std::move(impl));
}

FamilyOracle FamilyOracle::fromPredicate(Pred member, Nat elementBound, std::string description,
                                         Nat witnessArity) {
  auto impl = std::make_shared<Impl>();
  impl->pred = std::move(member);
  impl->bound = elementBound;
  impl->arity = witnessArity == 0 ? 1 : witnessArity;
  impl->desc = std::move(description);
  return FamilyOracle(std::move(impl));
}

bool FamilyOracle::member(const FiniteNatSet& s) const {
  if (impl_->members)
    return std::binary_search(impl_->members->begin(), impl_->members->end(), s);
  return impl_->pred(s);
}

Nat FamilyOracle::elementBound() const { return impl_->bound; }

const std::vector<FiniteNatSet>* FamilyOracle::list() const {
  return impl_->members ? &*impl_->members : nullptr;
}

Nat FamilyOracle::witnessArity() const { return impl_->arity; }

const std::string& FamilyOracle::description() const { return impl_->desc; }

FamilyOracle parseFamilyDescriptor(const std::string& descriptor) {
  auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    fail("ParseError", "family descriptor needs 'canonical:...' or 'explicit:...'");
  std::string kind = descriptor.substr(0, colon);
  std::string rest = descriptor.substr(colon + 1);
  if (kind == "canonical") {
    std::optional<Nat> k, m;
    std::size_t start = 0;
    while (start <= rest.size()) {
      auto comma = rest.find(',', start);
      std::string item = rest.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      auto eq = item.find('=');
      if (eq == std::string::npos) fail("ParseError", "expected key=value in '" + item + "'");
      std::string key(trimView(std::string_view(item).substr(0, eq)));
      Nat value = parseNat(std::string_view(item).substr(eq + 1), "family parameter");
      if (key == "k") k = value;
      else if (key == "M") m = value;
      else fail("ParseError", "unknown family parameter '" + key + "'");
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (!k || !m) fail("ParseError", "canonical family needs both k= and M=");
    return FamilyOracle::canonical(*k, *m);
  }
  if (kind == "explicit") {
    std::ifstream in(rest);
    if (!in) fail("ParseError", "cannot open family file '" + rest + "'");
    std::vector<FiniteNatSet> members;
    std::string line;
    while (std::getline(in, line)) members.push_back(FiniteNatSet::parse(line));
    return FamilyOracle::fromList(std::move(members));
  }
  fail("ParseError", "unknown family kind '" + kind + "'");
}

namespace {

// Look for a member t ≠ s with t ∩ n = s, i.e. t = s ∪ w for a nonempty
// w ⊆ [n, M], trying |w| = 1, 2, … up to the oracle's witness arity.
bool hasExtensionWitness(const FiniteNatSet& s, const FamilyOracle& X, Nat n) {
  const Nat M = X.elementBound();
  if (const auto* members = X.list()) {
    for (const auto& t : *members)
      if (t != s && t.initialSegment(n) == s) return true;
    return false;
  }
  if (n > M) return false;
  std::vector<Nat> picks;
  for (Nat size = 1; size <= X.witnessArity(); ++size) {
    picks.clear();
    // Depth-first with increasing first element; the size loop keeps the
    // overall order small-witness-first.
    std::function<bool(Nat, Nat)> exact = [&](Nat from, Nat remaining) -> bool {
      if (remaining == 0) {
        FiniteNatSet t = s;
        for (Nat p : picks) t = t.withElement(p);
        return X.member(t);
      }
      for (Nat a = from; a <= M; ++a) {
        picks.push_back(a);
        if (exact(a + 1, remaining - 1)) return true;
        picks.pop_back();
        if (a == UINT64_MAX) break;
      }
      return false;
    };
    if (exact(n, size)) return true;
  }
  return false;
}

}  // namespace

bool inClosure(const FiniteNatSet& s, const FamilyOracle& X) {
  const Nat M = X.elementBound();
  Nat start = s.empty() ? 0 : s.max() + 1;
  for (Nat n = start; n <= M; ++n)
    if (!hasExtensionWitness(s, X, n)) return false;
  return true;
}

namespace {

FamilyOracle derivativeOnce(const FamilyOracle& X) {
  if (const auto* members = X.list()) {
    std::vector<FiniteNatSet> kept;
    for (const auto& s : *members)
      if (inClosure(s, X)) kept.push_back(s);
    // Keep the parent's truncation: a shrunken list must not move the bound.
    auto derived = FamilyOracle::fromList(std::move(kept));
    if (derived.elementBound() == X.elementBound()) return derived;
    std::vector<FiniteNatSet> again = *derived.list();
    auto parentBound = X.elementBound();
    return FamilyOracle::fromPredicate(
        [list = std::move(again)](const FiniteNatSet& s) {
          return std::binary_search(list.begin(), list.end(), s);
        },
        parentBound, "derived(" + X.description() + ")", X.witnessArity());
  }
  auto memo = std::make_shared<std::unordered_map<FiniteNatSet, bool, FiniteNatSetHash>>();
  auto lock = std::make_shared<std::mutex>();
  FamilyOracle parent = X;
  return FamilyOracle::fromPredicate(
      [parent, memo, lock](const FiniteNatSet& s) {
        {
          std::lock_guard<std::mutex> g(*lock);
          auto it = memo->find(s);
          if (it != memo->end()) return it->second;
        }
        bool value = parent.member(s) && inClosure(s, parent);
        std::lock_guard<std::mutex> g(*lock);
        (*memo)[s] = value;
        return value;
      },
      X.elementBound(), "derived(" + X.description() + ")", X.witnessArity());
}

}  // namespace

FamilyOracle truncatedDerivative(const FamilyOracle& X, Nat k) {
  FamilyOracle cur = X;
  for (Nat i = 0; i < k; ++i) cur = derivativeOnce(cur);
  return cur;
}

DerivativeCertificate canonicalCertificate(Nat k, Nat M) {
  if (k == 0) fail("OutOfRange", "certificate depth must be at least 1");
  if (M + 1 < 2 * k) fail("OutOfRange", "element bound too small for depth " + std::to_string(k));
  DerivativeCertificate cert;
  cert.root = FiniteNatSet{};
  cert.depth = k;
  cert.tChain = {cert.root};
  cert.uChain = {cert.root};
  for (Nat i = 1; i <= k; ++i) {
    cert.tChain.push_back(cert.tChain.back().withElement(2 * (i - 1)));
    cert.uChain.push_back(cert.uChain.back().withElement(2 * i - 1));
  }
  return cert;
}

void validateCertificate(const FamilyOracle& X, const DerivativeCertificate& cert) {
  const Nat k = cert.depth;
  if (cert.tChain.size() != k + 1 || cert.uChain.size() != k + 1)
    fail("InvalidCertificate", "chain length does not match depth");
  if (cert.tChain[0] != cert.root || cert.uChain[0] != cert.root)
    fail("InvalidCertificate", "chains must start at the root");
  for (Nat i = 1; i <= k; ++i) {
    if (!cert.tChain[i - 1].properInitialSegmentOf(cert.tChain[i]))
      fail("InvalidCertificate", "t-chain is not a proper end-extension chain at step " +
                                     std::to_string(i));
    if (!cert.uChain[i - 1].properInitialSegmentOf(cert.uChain[i]))
      fail("InvalidCertificate", "u-chain is not a proper end-extension chain at step " +
                                     std::to_string(i));
  }
  auto blockOf = [](const FiniteNatSet& bigger, const FiniteNatSet& smaller) {
    return bigger.minus(smaller);
  };
  for (Nat i = 1; i <= k; ++i) {
    FiniteNatSet T = blockOf(cert.tChain[i], cert.tChain[i - 1]);
    FiniteNatSet U = blockOf(cert.uChain[i], cert.uChain[i - 1]);
    if (T.max() >= U.elements().front())
      fail("InvalidCertificate", "blocks out of order: t-block " + std::to_string(i) +
                                     " does not precede u-block");
    if (i < k) {
      FiniteNatSet Tnext = blockOf(cert.tChain[i + 1], cert.tChain[i]);
      if (U.max() >= Tnext.elements().front())
        fail("InvalidCertificate", "blocks out of order: u-block " + std::to_string(i) +
                                       " does not precede next t-block");
    }
  }
  if (!X.member(cert.root)) fail("InvalidCertificate", "root is not a member");
  for (Nat i = 1; i <= k; ++i) {
    if (!X.member(cert.tChain[i]))
      fail("InvalidCertificate", "t-chain witness " + std::to_string(i) + " is not a member");
    if (!X.member(cert.uChain[i]))
      fail("InvalidCertificate", "u-chain witness " + std::to_string(i) + " is not a member");
  }
}

std::map<Nat, std::pair<FiniteNatSet, FiniteNatSet>> realizeOscillations(
    const FamilyOracle& X, const DerivativeCertificate& cert) {
  validateCertificate(X, cert);
  const Nat k = cert.depth;
  std::map<Nat, std::pair<FiniteNatSet, FiniteNatSet>> out;
  for (Nat j = 0; j + 1 <= k; ++j)  // odd values 2j+1 from (t_{j+1}, u_j)
    out[2 * j + 1] = {cert.tChain[j + 1], cert.uChain[j]};
  for (Nat j = 1; j + 1 <= k; ++j)  // even values 2j from (t_j, u_j)
    out[2 * j] = {cert.tChain[j], cert.uChain[j]};
  for (const auto& [value, pair] : out) {
    Nat got = oscFinite(pair.first, pair.second);
    if (got != value)
      fail("InvalidCertificate", "pair realization for " + std::to_string(value) +
                                     " oscillates at " + std::to_string(got));
  }
  return out;
}

std::map<Nat, std::array<FiniteNatSet, 3>> realizeOscTriple(const FamilyOracle& X,
                                                            const DerivativeCertificate& cert) {
  validateCertificate(X, cert);
  const Nat k = cert.depth;
  std::map<Nat, std::array<FiniteNatSet, 3>> out;
  for (Nat j = 0; j + 1 <= k; ++j)  // odd values 2j+1 from (t_{j+1}, u_j, u_{j+1})
    out[2 * j + 1] = {cert.tChain[j + 1], cert.uChain[j], cert.uChain[j + 1]};
  for (Nat j = 1; j + 1 <= k; ++j)  // even values 2j from (t_j, t_{j+1}, u_j)
    out[2 * j] = {cert.tChain[j], cert.tChain[j + 1], cert.uChain[j]};
  for (const auto& [value, triple] : out) {
    Nat got = oscTriple(triple[0], triple[1], triple[2]);
    if (got != value)
      fail("InvalidCertificate", "triple realization for " + std::to_string(value) +
                                     " oscillates at " + std::to_string(got));
  }
  return out;
}

}  // namespace osc::finite
