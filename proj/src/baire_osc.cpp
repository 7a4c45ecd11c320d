#include "osc/baire_osc.hpp"

#include <bit>
#include <cctype>
#include <memory>

namespace osc::baire {

namespace {

bool strictlyIncreasing(const std::vector<Nat>& node) {
  for (std::size_t i = 1; i < node.size(); ++i)
    if (node[i - 1] >= node[i]) return false;
  return true;
}

std::optional<Nat> nextValueAbove(const std::vector<Nat>& node, const std::optional<Nat>& bound) {
  Nat candidate = 0;
  if (!node.empty()) candidate = node.back() + 1;
  if (bound && *bound + 1 > candidate) candidate = *bound + 1;
  return candidate;
}

}  // namespace

TreeOracle<Nat> fullTree() {
  return TreeOracle<Nat>(
      [](const std::vector<Nat>& node) { return strictlyIncreasing(node); },
      [](const std::vector<Nat>& node) -> std::optional<std::vector<Nat>> {
        if (!strictlyIncreasing(node)) return std::nullopt;
        return node;
      },
      [](const std::vector<Nat>& node, const std::optional<Nat>& bound) {
        return nextValueAbove(node, bound);
      },
      "full");
}

TreeOracle<Nat> evenTree() {
  auto member = [](const std::vector<Nat>& node) {
    if (!strictlyIncreasing(node)) return false;
    for (Nat v : node)
      if (v % 2) return false;
    return true;
  };
  return TreeOracle<Nat>(
      member,
      [member](const std::vector<Nat>& node) -> std::optional<std::vector<Nat>> {
        if (!member(node)) return std::nullopt;
        return node;
      },
      [](const std::vector<Nat>& node, const std::optional<Nat>& bound) -> std::optional<Nat> {
        auto v = nextValueAbove(node, bound);
        return *v + (*v % 2);
      },
      "even");
}

TreeOracle<Nat> listTree(std::vector<std::vector<Nat>> nodes) {
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  auto shared = std::make_shared<const std::vector<std::vector<Nat>>>(std::move(nodes));
  return TreeOracle<Nat>(
      [shared](const std::vector<Nat>& node) {
        return std::binary_search(shared->begin(), shared->end(), node);
      },
      // This oracle only answers membership; splitting structure is unknown.
      [](const std::vector<Nat>&) -> std::optional<std::vector<Nat>> { return std::nullopt; },
      [shared](const std::vector<Nat>& node,
               const std::optional<Nat>& bound) -> std::optional<Nat> {
        std::optional<Nat> best;
        for (const auto& cand : *shared) {
          if (cand.size() != node.size() + 1) continue;
          if (!std::equal(node.begin(), node.end(), cand.begin())) continue;
          Nat v = cand.back();
          if (!node.empty() && v <= node.back()) continue;
          if (bound && v <= *bound) continue;
          if (!best || v < *best) best = v;
        }
        return best;
      },
      "list[" + std::to_string(shared->size()) + "]");
}

Nat streamDelta(const BitStream& x, const BitStream& y, Nat depthBudget) {
  for (Nat n = 0; n < depthBudget; ++n)
    if (x(n) != y(n)) return n;
  fail("SearchBudgetExceeded",
       "streams agree up to depth " + std::to_string(depthBudget));
}

BitStream dyadicStream(Nat k) {
  Nat m = k + 1;
  int width = std::bit_width(m) - 1;  // digits after the leading 1
  return [m, width](Nat i) -> int {
    if (i >= static_cast<Nat>(width)) return 0;
    return static_cast<int>((m >> (width - 1 - static_cast<int>(i))) & 1);
  };
}

StreamFamily dyadicFamily() {
  return [](Nat k) { return dyadicStream(k); };
}

std::vector<ImageStep> imageSteps(const BitStream& x, const StreamFamily& D, Nat count,
                                  const SearchBudget& budget) {
  std::vector<ImageStep> out;
  std::optional<Nat> prevDelta;
  for (Nat n = 0; n < count; ++n) {
    bool found = false;
    for (Nat k = 0; k <= budget.index; ++k) {
      Nat d = streamDelta(x, D(k), budget.depth);
      if (!prevDelta || d > *prevDelta) {
        out.push_back(ImageStep{k, d});
        prevDelta = d;
        found = true;
        break;
      }
    }
    if (!found)
      fail("SearchBudgetExceeded", "no family index improves agreement past " +
                                       std::to_string(*prevDelta) + " within " +
                                       std::to_string(budget.index) + " tries");
  }
  return out;
}

Nat kIndex(const BitStream& x, const StreamFamily& D, Nat n, const SearchBudget& budget) {
  return imageSteps(x, D, n + 1, budget).back().k;
}

std::vector<Nat> superperfectImage(const BitStream& x, const StreamFamily& D, Nat N,
                                   const SearchBudget& budget) {
  std::vector<Nat> out;
  for (const auto& step : imageSteps(x, D, N, budget)) out.push_back(step.delta);
  return out;
}

BitStream streamFromBits(std::vector<int> prefix, int tail) {
  auto shared = std::make_shared<const std::vector<int>>(std::move(prefix));
  return [shared, tail](Nat i) -> int {
    return i < shared->size() ? (*shared)[i] : tail;
  };
}

BitStream alternatingStream(int firstBit) {
  return [firstBit](Nat i) -> int { return (static_cast<int>(i % 2) + firstBit) % 2; };
}

std::vector<int> bitsFromString(const std::string& text) {
  std::vector<int> bits;
  for (char c : text) {
    if (c == '0')
      bits.push_back(0);
    else if (c == '1')
      bits.push_back(1);
    else if (!std::isspace(static_cast<unsigned char>(c)))
      fail("ParseError", std::string("bit strings use only 0 and 1, got '") + c + "'");
  }
  return bits;
}

std::string bitsToString(const std::vector<int>& bits) {
  std::string out;
  for (int b : bits) out += b ? '1' : '0';
  return out;
}

}  // namespace osc::baire
