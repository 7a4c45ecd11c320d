#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "osc/errors.hpp"

namespace osc::baire {

using Nat = std::uint64_t;

// Oracle access to a tree of finite strictly increasing sequences over an
// ordered index type. Oracles may be partial: queries they cannot answer
// throw OracleFailure.
template <typename Index>
class TreeOracle {
 public:
  using NodeT = std::vector<Index>;
  using MemberFn = std::function<bool(const NodeT&)>;
  // Least splitting node extending the argument, when the oracle knows one.
  using SplitFn = std::function<std::optional<NodeT>(const NodeT&)>;
  // Least admissible next value strictly above the bound (and above the
  // node's last entry), when one exists.
  using ExtendFn = std::function<std::optional<Index>(const NodeT&, const std::optional<Index>&)>;

  TreeOracle(MemberFn member, SplitFn split, ExtendFn extend, std::string description)
      : member_(std::move(member)),
        split_(std::move(split)),
        extend_(std::move(extend)),
        desc_(std::move(description)) {}

  bool isMember(const NodeT& node) const { return member_(node); }

  NodeT leastSplittingAbove(const NodeT& node) const {
    auto r = split_(node);
    if (!r) fail("OracleFailure", "no splitting extension available (" + desc_ + ")");
    return *r;
  }

  // One-step extension: the node plus the least admissible value above bound.
  NodeT largeExtension(const NodeT& node, const std::optional<Index>& bound) const {
    auto r = extend_(node, bound);
    if (!r) fail("OracleFailure", "no admissible large extension (" + desc_ + ")");
    NodeT out = node;
    out.push_back(*r);
    return out;
  }

  const std::string& description() const { return desc_; }

 private:
  MemberFn member_;
  SplitFn split_;
  ExtendFn extend_;
  std::string desc_;
};

// All strictly increasing finite sequences of naturals.
TreeOracle<Nat> fullTree();
// Strictly increasing sequences of even naturals.
TreeOracle<Nat> evenTree();
// Membership restricted to an explicit node list; splitting queries fail.
TreeOracle<Nat> listTree(std::vector<std::vector<Nat>> nodes);

// Full tree over the universe {value(0) < value(1) < ... < value(count-1)}.
// Extensions past the last universe point are unavailable.
template <typename Index>
TreeOracle<Index> enumeratedFullTree(std::function<Index(Nat)> value, Nat count) {
  auto findIndex = [value, count](const Index& v) -> std::optional<Nat> {
    Nat lo = 0, hi = count;
    while (lo < hi) {  // least i with value(i) >= v
      Nat mid = lo + (hi - lo) / 2;
      if (value(mid) < v)
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == count) return std::nullopt;
    Index at = value(lo);
    if (v < at || at < v) return std::nullopt;
    return lo;
  };
  auto member = [findIndex](const std::vector<Index>& node) {
    for (std::size_t i = 0; i < node.size(); ++i) {
      if (i > 0 && !(node[i - 1] < node[i])) return false;
      if (!findIndex(node[i])) return false;
    }
    return true;
  };
  auto split = [member, value, count](const std::vector<Index>& node)
      -> std::optional<std::vector<Index>> {
    if (!member(node)) return std::nullopt;
    if (!node.empty() && !(node.back() < value(count - 1))) return std::nullopt;
    if (node.empty() && count == 0) return std::nullopt;
    return node;  // every extendable node of a full tree splits
  };
  auto extend = [value, count](const std::vector<Index>& node,
                               const std::optional<Index>& bound) -> std::optional<Index> {
    std::optional<Index> floor = bound;
    if (!node.empty() && (!floor || *floor < node.back())) floor = node.back();
    Nat lo = 0, hi = count;
    while (lo < hi) {  // least i with value(i) > floor
      Nat mid = lo + (hi - lo) / 2;
      if (floor && !(*floor < value(mid)))
        lo = mid + 1;
      else
        hi = mid;
    }
    if (lo == count) return std::nullopt;
    return value(lo);
  };
  return TreeOracle<Index>(member, split, extend, "enumerated[" + std::to_string(count) + "]");
}

// Finite prefixes of three branches, built so that the oscillation pattern
// of the triple is fully determined below the window.
template <typename Index>
struct PrefixTriple {
  std::vector<Index> x, y, z;
  std::optional<Index> window;  // sup of every value used in the construction
};

// Reads the oscillation bits of a prefix triple: the gap classes of x that
// are bounded by an element of x and meet both y and z, in order; a class
// contributes 0 when its least y element comes no later than its least z
// element, else 1. Comparison-only, so it works for any ordered index.
template <typename Index>
std::vector<int> oscInfinite(const PrefixTriple<Index>& t) {
  std::vector<int> bits;
  for (std::size_t i = 0; i < t.x.size(); ++i) {
    auto inClass = [&](const Index& v) {
      if (!(v < t.x[i])) return false;
      if (i > 0 && !(t.x[i - 1] < v)) return false;
      return true;
    };
    std::optional<Index> my, mz;
    for (const auto& v : t.y)
      if (inClass(v)) {
        my = v;
        break;
      }
    for (const auto& v : t.z)
      if (inClass(v)) {
        mz = v;
        break;
      }
    if (my && mz) bits.push_back(*mz < *my ? 1 : 0);
  }
  return bits;
}

// Builds prefixes x (from TX), y (from TY), z (from TZ) realizing the given
// bit pattern: per bit, the two lower branches each gain one fresh gap
// element in the order dictated by the bit, then x closes the gap from
// above. Every extension takes the least admissible value above the running
// maximum and re-lands on a splitting node.
template <typename Index>
PrefixTriple<Index> realizeBits(const TreeOracle<Index>& TX, const TreeOracle<Index>& TY,
                                const TreeOracle<Index>& TZ, const std::vector<int>& alpha) {
  using NodeT = std::vector<Index>;
  PrefixTriple<Index> out;
  std::optional<Index>& bound = out.window;
  auto raise = [&bound](const NodeT& n) {
    for (const auto& v : n)
      if (!bound || *bound < v) bound = v;
  };
  out.x = TX.leastSplittingAbove({});
  out.y = TY.leastSplittingAbove({});
  out.z = TZ.leastSplittingAbove({});
  raise(out.x);
  raise(out.y);
  raise(out.z);
  auto grow = [&](const TreeOracle<Index>& T, NodeT& n) {
    n = T.largeExtension(n, bound);
    if (!bound || *bound < n.back()) bound = n.back();
    n = T.leastSplittingAbove(n);
    raise(n);
  };
  for (int bit : alpha) {
    if (bit == 0) {
      grow(TY, out.y);
      grow(TZ, out.z);
    } else {
      grow(TZ, out.z);
      grow(TY, out.y);
    }
    grow(TX, out.x);
  }
  return out;
}

// --- binary streams and the superperfect image map ---

// An infinite 0/1 stream, queried by position.
using BitStream = std::function<int(Nat)>;
// A countable family of streams d_0, d_1, …, queried by index.
using StreamFamily = std::function<BitStream(Nat)>;

struct SearchBudget {
  Nat depth = 10'000;  // how far two streams are compared
  Nat index = 10'000;  // how many family indices a search may try
};

// Least position where the streams differ; throws SearchBudgetExceeded when
// they agree on every position below the depth budget.
Nat streamDelta(const BitStream& x, const BitStream& y, Nat depthBudget);

// The k-th eventually-zero stream: the binary digits of k+1 after the
// leading 1, most significant first, padded with zeros. The family is dense
// in the space of streams.
BitStream dyadicStream(Nat k);
StreamFamily dyadicFamily();

struct ImageStep {
  Nat k = 0;      // family index chosen at this stage
  Nat delta = 0;  // agreement length with that family stream
};

// Stage n picks the least family index whose agreement with x strictly
// exceeds every earlier stage's agreement (stage 0 takes index 0's own
// agreement, so k(0) = 0). The deltas are the image sequence; they are
// strictly increasing by construction.
std::vector<ImageStep> imageSteps(const BitStream& x, const StreamFamily& D, Nat count,
                                  const SearchBudget& budget = {});
// k_x(n): the family index chosen at stage n.
Nat kIndex(const BitStream& x, const StreamFamily& D, Nat n, const SearchBudget& budget = {});
// First N values of the image sequence n ↦ delta(x, d_{k_x(n)}).
std::vector<Nat> superperfectImage(const BitStream& x, const StreamFamily& D, Nat N,
                                   const SearchBudget& budget = {});

// Stream with the given prefix and a constant tail.
BitStream streamFromBits(std::vector<int> prefix, int tail);
// Period-two stream 0101… shifted by phase.
BitStream alternatingStream(int firstBit);

std::vector<int> bitsFromString(const std::string& text);  // "0110" etc.
std::string bitsToString(const std::vector<int>& bits);

}  // namespace osc::baire
