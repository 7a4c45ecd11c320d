#include "osc/seq_osc.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace osc::seq {

namespace {

Nat parseNatToken(const std::string& token) {
  std::size_t a = token.find_first_not_of(" \t");
  std::size_t b = token.find_last_not_of(" \t");
  if (a == std::string::npos) fail("ParseError", "empty entry in sequence");
  std::string core = token.substr(a, b - a + 1);
  Nat value = 0;
  for (char c : core) {
    if (c < '0' || c > '9') fail("ParseError", "invalid natural: '" + core + "'");
    Nat digit = static_cast<Nat>(c - '0');
    if (value > (std::numeric_limits<Nat>::max() - digit) / 10)
      fail("ParseError", "natural out of range: '" + core + "'");
    value = value * 10 + digit;
  }
  return value;
}

void raiseOver(std::optional<Nat>& bound, const Seq& node) {
  for (Nat v : node)
    if (!bound || *bound < v) bound = v;
}

// Extends the node with fresh values above the running bound until it
// reaches the requested length, then re-lands on a splitting node. The bound
// rises over everything produced, so later growth stays strictly above.
Seq growPast(const Tree& T, Seq node, std::optional<Nat>& bound, std::size_t minLen) {
  while (node.size() < minLen) {
    node = T.largeExtension(node, bound);
    if (!bound || *bound < node.back()) bound = node.back();
  }
  node = T.leastSplittingAbove(node);
  raiseOver(bound, node);
  return node;
}

}  // namespace

Seq parseSeq(const std::string& text) {
  Seq out;
  std::size_t nonSpace = text.find_first_not_of(" \t");
  if (nonSpace == std::string::npos) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    Nat v = parseNatToken(token);
    if (!out.empty() && out.back() >= v)
      fail("ParseError", "sequence entries must be strictly increasing");
    out.push_back(v);
  }
  std::size_t lastNonSpace = text.find_last_not_of(" \t");
  if (lastNonSpace != std::string::npos && text[lastNonSpace] == ',')
    fail("ParseError", "trailing comma in sequence");
  return out;
}

std::string strSeq(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

Nat oscSeq(const Seq& f, const Seq& g) {
  if (f.size() != g.size())
    fail("LengthMismatch", "oscillation needs equal window lengths (" +
                               std::to_string(f.size()) + " vs " + std::to_string(g.size()) + ")");
  return oscSeqPrefix(f, g);
}

Nat oscSeqPrefix(const Seq& f, const Seq& g) {
  std::size_t common = std::min(f.size(), g.size());
  Nat count = 0;
  for (std::size_t n = 0; n + 1 < common; ++n)
    if (f[n] <= g[n] && f[n + 1] > g[n + 1]) ++count;
  return count;
}

SplitExtension extendSplitting(const Tree& S, const Tree& T, const Seq& s, const Seq& t, Nat n) {
  Seq a = S.leastSplittingAbove(s);
  Seq b = T.leastSplittingAbove(t);
  if (n == 0) {
    Nat o = oscSeqPrefix(a, b);
    return SplitExtension{a, b, o, o, false};
  }

  bool swapped = false;
  if (a.size() > b.size() ||
      (a.size() == b.size() && !a.empty() && a.back() > b.back())) {
    std::swap(a, b);
    swapped = true;
  }
  const Tree& TA = swapped ? T : S;  // tree of the (eventually) shorter side
  const Tree& TB = swapped ? S : T;

  std::optional<Nat> bound;
  raiseOver(bound, a);
  raiseOver(bound, b);

  // Normalise to the shorter-first shape: 1 <= |a| < |b| with
  // a(|a|-1) <= b(|a|-1). Every step here adds no descent.
  if (a.size() == b.size()) {
    if (a.empty()) {
      a = growPast(TA, a, bound, 1);
    }
    b = growPast(TB, b, bound, a.size() + 1);
  } else if (a.empty()) {
    // 0 = |a| < |b|: one uncounted round; a's fresh values dominate all of
    // b's old entries, so no comparison position gains a descent.
    a = growPast(TA, a, bound, b.size() + 1);
    b = growPast(TB, b, bound, a.size() + 1);
  }
  if (a.empty() || a.size() >= b.size() || a[a.size() - 1] > b[a.size() - 1])
    fail("PreconditionViolated",
         "shorter-first shape unreachable: the shorter window exceeds the longer one at its last "
         "position");

  Nat baseline = oscSeqPrefix(a, b);
  for (Nat round = 0; round < n; ++round) {
    // a overtakes b with values above everything seen, landing one descent
    // at a's old last position; then b overtakes a the same way, restoring
    // the shape for the next round.
    a = growPast(TA, a, bound, b.size() + 1);
    b = growPast(TB, b, bound, a.size() + 1);
  }

  SplitExtension out;
  out.sExtension = swapped ? b : a;
  out.tExtension = swapped ? a : b;
  out.baselineOsc = baseline;
  out.finalOsc = oscSeqPrefix(a, b);
  out.swapped = swapped;
  return out;
}

PairingScheme cantorPairing() {
  PairingScheme p;
  p.name = "cantor";
  p.encode = [](Nat aa, Nat bb) -> Nat {
    unsigned __int128 sum = static_cast<unsigned __int128>(aa) + bb;
    unsigned __int128 code = sum * (sum + 1) / 2 + bb;
    if (code > std::numeric_limits<Nat>::max())
      fail("OutOfRange", "pairing code exceeds 64 bits");
    return static_cast<Nat>(code);
  };
  p.decode = [](Nat m) -> std::pair<Nat, Nat> {
    auto tri = [](unsigned __int128 w) { return w * (w + 1) / 2; };
    Nat w = static_cast<Nat>((std::sqrt(8.0L * static_cast<long double>(m) + 1.0L) - 1.0L) / 2.0L);
    while (w > 0 && tri(w) > m) --w;
    while (tri(w + 1) <= m) ++w;
    Nat b = m - static_cast<Nat>(tri(w));
    return {w - b, b};
  };
  return p;
}

Nat refinedColor(const Seq& f, const Seq& g, const PairingScheme& p) {
  Nat o = oscSeq(f, g);
  if (o == 0)
    fail("ZeroOscillation", "refined colour is undefined when the oscillation count is zero");
  Nat top = static_cast<Nat>(std::bit_width(o)) - 1;
  return p.decode(top).first;
}

std::optional<Nat> Rectangle::value(const Seq& a, const Seq& b) const {
  auto di = std::lower_bound(D.begin(), D.end(), a);
  if (di == D.end() || *di != a) return std::nullopt;
  auto ei = std::lower_bound(E.begin(), E.end(), b);
  if (ei == E.end() || *ei != b) return std::nullopt;
  std::size_t i = static_cast<std::size_t>(di - D.begin());
  std::size_t j = static_cast<std::size_t>(ei - E.begin());
  return table[i * E.size() + j];
}

Rectangle makeRectangle(Nat k, std::vector<Seq> D, std::vector<Seq> E, std::vector<Nat> table) {
  auto checkRows = [k](const std::vector<Seq>& rows, const char* side) {
    for (const Seq& row : rows) {
      if (row.size() != k)
        fail("InvalidRectangle", std::string(side) + " row length differs from k");
      for (std::size_t i = 1; i < row.size(); ++i)
        if (row[i - 1] >= row[i])
          fail("InvalidRectangle", std::string(side) + " row is not strictly increasing");
    }
  };
  checkRows(D, "D");
  checkRows(E, "E");
  if (table.size() != D.size() * E.size())
    fail("InvalidRectangle", "table size differs from |D| * |E|");

  auto sortPermutation = [](const std::vector<Seq>& rows) {
    std::vector<std::size_t> idx(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(),
              [&rows](std::size_t x, std::size_t y) { return rows[x] < rows[y]; });
    return idx;
  };
  std::vector<std::size_t> pd = sortPermutation(D);
  std::vector<std::size_t> pe = sortPermutation(E);

  Rectangle r;
  r.k = k;
  for (std::size_t i : pd) r.D.push_back(D[i]);
  for (std::size_t j : pe) r.E.push_back(E[j]);
  for (std::size_t i = 1; i < r.D.size(); ++i)
    if (r.D[i - 1] == r.D[i]) fail("InvalidRectangle", "D contains duplicate rows");
  for (std::size_t j = 1; j < r.E.size(); ++j)
    if (r.E[j - 1] == r.E[j]) fail("InvalidRectangle", "E contains duplicate rows");
  r.table.resize(table.size());
  for (std::size_t i = 0; i < pd.size(); ++i)
    for (std::size_t j = 0; j < pe.size(); ++j)
      r.table[i * pe.size() + j] = table[pd[i] * pe.size() + pe[j]];
  return r;
}

std::string rectangleToJson(const Rectangle& r) {
  nlohmann::json j;
  j["k"] = r.k;
  j["D"] = r.D;
  j["E"] = r.E;
  nlohmann::json cells = nlohmann::json::array();
  for (std::size_t i = 0; i < r.D.size(); ++i)
    for (std::size_t jj = 0; jj < r.E.size(); ++jj)
      cells.push_back({i, jj, r.table[i * r.E.size() + jj]});
  j["t"] = cells;
  return j.dump();
}

Rectangle rectangleFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("rectangle JSON: ") + e.what());
  }
  try {
    Nat k = j.at("k").get<Nat>();
    auto D = j.at("D").get<std::vector<Seq>>();
    auto E = j.at("E").get<std::vector<Seq>>();
    std::vector<std::optional<Nat>> cells(D.size() * E.size());
    for (const auto& triple : j.at("t")) {
      if (!triple.is_array() || triple.size() != 3)
        fail("ParseError", "rectangle JSON: each table entry must be [i, j, value]");
      std::size_t ci = triple[0].get<std::size_t>();
      std::size_t cj = triple[1].get<std::size_t>();
      if (ci >= D.size() || cj >= E.size())
        fail("InvalidRectangle", "table entry indexes outside D x E");
      std::size_t flat = ci * E.size() + cj;
      if (cells[flat]) fail("InvalidRectangle", "duplicate table entry");
      cells[flat] = triple[2].get<Nat>();
    }
    std::vector<Nat> table;
    for (const auto& c : cells) {
      if (!c) fail("InvalidRectangle", "table is not total on D x E");
      table.push_back(*c);
    }
    return makeRectangle(k, std::move(D), std::move(E), std::move(table));
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", std::string("rectangle JSON: ") + e.what());
  }
}

namespace {

// Bit stream packed into a natural, low positions first. Bits at positions
// past 63 are implicitly zero: a set bit there marks overflow on writing,
// and reads simply return zero.
struct BitWriter {
  Nat code = 0;
  int pos = 0;
  bool overflow = false;

  void push(int bit) {
    if (pos < 64) {
      if (bit) code |= Nat{1} << pos;
    } else if (bit) {
      overflow = true;
    }
    ++pos;
  }

  // Elias-gamma of value + 1: (width - 1) zeros, then the code word from its
  // leading one downwards.
  void gamma(Nat value) {
    if (value == std::numeric_limits<Nat>::max()) {
      overflow = true;
      return;
    }
    Nat v = value + 1;
    int width = std::bit_width(v);
    for (int i = 0; i < width - 1; ++i) push(0);
    for (int i = width - 1; i >= 0; --i) push(static_cast<int>((v >> i) & 1));
  }
};

struct BitReader {
  Nat code = 0;
  int pos = 0;

  int next() {
    int bit = (pos < 64) ? static_cast<int>((code >> pos) & 1) : 0;
    ++pos;
    return bit;
  }

  std::optional<Nat> gamma() {
    int zeros = 0;
    while (next() == 0)
      if (++zeros > 63) return std::nullopt;  // ran into the implicit-zero tail
    Nat v = 1;
    for (int i = 0; i < zeros; ++i) v = (v << 1) | static_cast<Nat>(next());
    return v - 1;
  }
};

std::optional<Nat> encodeRectangle(const Rectangle& r) {
  BitWriter w;
  w.gamma(r.k);
  w.gamma(r.D.size());
  for (const Seq& row : r.D)
    for (Nat v : row) w.gamma(v);
  w.gamma(r.E.size());
  for (const Seq& row : r.E)
    for (Nat v : row) w.gamma(v);
  for (Nat v : r.table) w.gamma(v);
  if (w.overflow) return std::nullopt;
  return w.code;
}

std::optional<Rectangle> decodeRectangle(Nat code) {
  BitReader r{code};
  auto readRows = [&r](Nat count, Nat k) -> std::optional<std::vector<Seq>> {
    std::vector<Seq> rows;
    for (Nat i = 0; i < count; ++i) {
      Seq row;
      for (Nat jj = 0; jj < k; ++jj) {
        auto v = r.gamma();
        if (!v) return std::nullopt;
        if (!row.empty() && row.back() >= *v) return std::nullopt;  // not increasing
        row.push_back(*v);
      }
      if (!rows.empty() && rows.back() >= row) return std::nullopt;  // not canonical order
      rows.push_back(std::move(row));
    }
    return rows;
  };

  Rectangle out;
  auto k = r.gamma();
  if (!k) return std::nullopt;
  out.k = *k;
  auto nd = r.gamma();
  if (!nd || *nd > 64) return std::nullopt;
  if (*nd > 0 && out.k > 64) return std::nullopt;  // a row this long cannot fit the code
  auto D = readRows(*nd, out.k);
  if (!D) return std::nullopt;
  out.D = std::move(*D);
  auto ne = r.gamma();
  if (!ne || *ne > 64) return std::nullopt;
  if (*ne > 0 && out.k > 64) return std::nullopt;
  auto E = readRows(*ne, out.k);
  if (!E) return std::nullopt;
  out.E = std::move(*E);
  for (Nat i = 0; i < *nd * *ne; ++i) {
    auto v = r.gamma();
    if (!v) return std::nullopt;
    out.table.push_back(*v);
  }
  // The whole code must be consumed: leftover set bits are not a rectangle.
  if (r.pos < 64 && (code >> r.pos) != 0) return std::nullopt;
  return out;
}

}  // namespace

RectangleEnumeration RectangleEnumeration::canonical() { return {}; }

RectangleEnumeration RectangleEnumeration::seeded(std::vector<Rectangle> seeds) {
  RectangleEnumeration e;
  for (Rectangle& s : seeds)
    e.seeds.push_back(makeRectangle(s.k, std::move(s.D), std::move(s.E), std::move(s.table)));
  return e;
}

Rectangle RectangleEnumeration::at(Nat index) const {
  if (index < seeds.size()) return seeds[index];
  auto r = decodeRectangle(index - seeds.size());
  if (!r) return Rectangle{};  // offsets that code nothing name the trivial rectangle
  return *r;
}

Nat RectangleEnumeration::indexOf(const Rectangle& r) const {
  Rectangle c = makeRectangle(r.k, r.D, r.E, r.table);
  for (std::size_t i = 0; i < seeds.size(); ++i)
    if (seeds[i] == c) return i;
  auto code = encodeRectangle(c);
  if (!code || *code > std::numeric_limits<Nat>::max() - seeds.size())
    fail("OutOfRange", "rectangle code exceeds the 64-bit index space");
  return seeds.size() + *code;
}

Rectangle rectangleAt(const RectangleEnumeration& e, Nat index) { return e.at(index); }

Nat rectangleIndex(const Rectangle& r, const RectangleEnumeration& e) { return e.indexOf(r); }

Nat finalColor(const Seq& f, const Seq& g, const RectangleEnumeration& e,
               const PairingScheme& p) {
  Nat n = refinedColor(f, g, p);
  Rectangle r = e.at(n);
  if (f.size() < r.k || g.size() < r.k)
    fail("WindowTooShort", "windows shorter than the rectangle's node length " +
                               std::to_string(r.k));
  Seq a(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(r.k));
  Seq b(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(r.k));
  auto v = r.value(a, b);
  return v ? *v : 0;
}

TableDemo tableDemo(const std::vector<std::vector<Nat>>& target) {
  Nat n = target.size();
  if (n == 0 || n > 3) fail("OutOfRange", "table demo supports 1x1 up to 3x3 targets");
  std::vector<Nat> flat;
  for (const auto& row : target) {
    if (row.size() != n) fail("OutOfRange", "table demo target must be square");
    for (Nat v : row) {
      if (v > 3) fail("OutOfRange", "table demo target values must be at most 3");
      flat.push_back(v);
    }
  }

  TableDemo demo;
  demo.n = n;
  for (Nat i = 0; i < n; ++i) demo.A.push_back({2 * i, 2 * i + 1});
  for (Nat j = 0; j < n; ++j) demo.B.push_back({2 * n + 2 * j, 2 * n + 2 * j + 1});
  demo.rectangle = makeRectangle(2, demo.A, demo.B, flat);
  demo.enumeration = RectangleEnumeration::seeded({demo.rectangle});
  demo.pairing = cantorPairing();

  // One vectorised round of the large-extension recursion, shared across all
  // pairs: every B grows one fresh value, then every A grows one value above
  // all of them. Each pair (A_i, B_j) then shows exactly one descent, at
  // position 1, so its refined colour selects rectangle 0 — the seed.
  Tree full = osc::baire::fullTree();
  std::optional<Nat> bound;
  for (const Seq& x : demo.A) raiseOver(bound, x);
  for (const Seq& x : demo.B) raiseOver(bound, x);
  for (Seq& bj : demo.B) {
    bj = full.largeExtension(bj, bound);
    bound = bj.back();
  }
  for (Seq& ai : demo.A) {
    ai = full.largeExtension(ai, bound);
    bound = ai.back();
  }
  return demo;
}

}  // namespace osc::seq
