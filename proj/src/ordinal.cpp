#include "osc/ordinal.hpp"

#include <algorithm>
#include <cctype>

namespace osc::ord {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal out;
  if (n) out.terms_.push_back(Term{Ordinal{}, n});
  return out;
}

Ordinal Ordinal::omega() { return omegaPow(nat(1), 1); }

Ordinal Ordinal::omegaPow(const Ordinal& exponent, std::uint64_t coeff) {
  if (coeff == 0) return Ordinal{};
  Ordinal out;
  out.terms_.push_back(Term{exponent, coeff});
  return out;
}

Ordinal Ordinal::fromTerms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) fail("NotCNF", "zero coefficient in term " + std::to_string(i));
    if (i > 0 && cmp(terms[i - 1].exponent, terms[i].exponent) <= 0)
      fail("NotCNF", "exponents must strictly decrease at term " + std::to_string(i));
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool Ordinal::isFinite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.isZero());
}

std::uint64_t Ordinal::finiteValue() const {
  if (!isFinite()) fail("OutOfRange", "finiteValue of infinite ordinal " + str());
  return terms_.empty() ? 0 : terms_[0].coeff;
}

bool Ordinal::isSuccessor() const {
  return !terms_.empty() && terms_.back().exponent.isZero();
}

bool Ordinal::isLimit() const { return !terms_.empty() && !terms_.back().exponent.isZero(); }

Ordinal Ordinal::succ() const { return add(nat(1)); }

Ordinal Ordinal::pred() const {
  if (!isSuccessor()) fail("OutOfRange", "predecessor of non-successor " + str());
  Ordinal out = *this;
  if (out.terms_.back().coeff > 1)
    --out.terms_.back().coeff;
  else
    out.terms_.pop_back();
  return out;
}

int Ordinal::cmp(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    int e = cmp(x[i].exponent, y[i].exponent);
    if (e != 0) return e;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff ? -1 : 1;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  return 0;
}

Ordinal Ordinal::add(const Ordinal& other) const {
  if (other.isZero()) return *this;
  if (isZero()) return other;
  const Ordinal& lead = other.terms_[0].exponent;
  std::vector<Term> out;
  std::size_t i = 0;
  while (i < terms_.size() && cmp(terms_[i].exponent, lead) > 0) out.push_back(terms_[i++]);
  if (i < terms_.size() && cmp(terms_[i].exponent, lead) == 0) {
    out.push_back(Term{lead, terms_[i].coeff + other.terms_[0].coeff});
  } else {
    out.push_back(other.terms_[0]);
  }
  out.insert(out.end(), other.terms_.begin() + 1, other.terms_.end());
  Ordinal result;
  result.terms_ = std::move(out);
  return result;
}

std::optional<Ordinal> Ordinal::leftDifference(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && cmp(x[i].exponent, y[i].exponent) == 0 &&
         x[i].coeff == y[i].coeff)
    ++i;
  if (i == x.size()) {
    // a is a term-prefix of b; the remainder adds on directly.
    Ordinal d;
    d.terms_.assign(y.begin() + i, y.end());
    return d;
  }
  if (i == y.size()) return std::nullopt;  // a has extra terms: a > b
  int e = cmp(x[i].exponent, y[i].exponent);
  if (e > 0) return std::nullopt;  // a's term dominates: a > b
  if (e < 0) {
    // b jumps to a larger exponent here; its tail absorbs the rest of a.
    Ordinal d;
    d.terms_.assign(y.begin() + i, y.end());
    return d;
  }
  if (x[i].coeff > y[i].coeff) return std::nullopt;
  // Same exponent, smaller coefficient: top up the coefficient, absorb a's tail.
  Ordinal d;
  d.terms_.push_back(Term{y[i].exponent, y[i].coeff - x[i].coeff});
  d.terms_.insert(d.terms_.end(), y.begin() + i + 1, y.end());
  return d;
}

std::size_t Ordinal::hash() const noexcept {
  std::size_t h = 14695981039346656037ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const auto& t : terms_) {
    mix(t.exponent.hash());
    mix(static_cast<std::size_t>(t.coeff));
  }
  return h;
}

namespace {

struct Parser {
  std::string_view text;
  std::size_t pos = 0;

  void skipSpace() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skipSpace();
    return pos >= text.size();
  }
  char peek() {
    skipSpace();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool consume(char c) {
    skipSpace();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!consume(c))
      fail("ParseError", std::string("expected '") + c + "' at offset " + std::to_string(pos) +
                             " in ordinal '" + std::string(text) + "'");
  }

  std::uint64_t parseNumber() {
    skipSpace();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("ParseError", "expected a number at offset " + std::to_string(pos) + " in ordinal '" +
                             std::string(text) + "'");
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (value > (UINT64_MAX - digit) / 10) fail("ParseError", "coefficient overflows");
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }

  Ordinal::Term parseTerm() {
    skipSpace();
    if (consume('w')) {
      Ordinal exponent = Ordinal::nat(1);
      if (consume('^')) {
        expect('(');
        exponent = parseOrdinal();
        expect(')');
      }
      std::uint64_t coeff = 1;
      if (consume('*')) {
        coeff = parseNumber();
        if (coeff == 0) fail("NotCNF", "zero coefficient");
      }
      return Ordinal::Term{exponent, coeff};
    }
    std::uint64_t n = parseNumber();
    if (n == 0) fail("NotCNF", "zero is not a term");
    return Ordinal::Term{Ordinal{}, n};
  }

  Ordinal parseOrdinal() {
    skipSpace();
    // A lone 0 (not followed by more digits) is the zero ordinal.
    if (pos < text.size() && text[pos] == '0' &&
        (pos + 1 >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos + 1])))) {
      ++pos;
      return Ordinal{};
    }
    std::vector<Ordinal::Term> terms;
    terms.push_back(parseTerm());
    while (consume('+')) terms.push_back(parseTerm());
    return Ordinal::fromTerms(std::move(terms));
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  Parser p{text};
  Ordinal out = p.parseOrdinal();
  if (!p.done())
    fail("ParseError", "trailing input at offset " + std::to_string(p.pos) + " in ordinal '" +
                           std::string(text) + "'");
  return out;
}

std::string Ordinal::str() const {
  if (isZero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += '+';
    const Term& t = terms_[i];
    if (t.exponent.isZero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    if (t.exponent == nat(1))
      out += "w";
    else
      out += "w^(" + t.exponent.str() + ")";
    if (t.coeff != 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

}  // namespace osc::ord
