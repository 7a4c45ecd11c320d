#include "osc/lspace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <sstream>

namespace osc::lspace {

namespace {

using Int = std::int64_t;
using Wide = __int128;

Wide wideAbs(Wide v) { return v < 0 ? -v : v; }

Wide wideGcd(Wide a, Wide b) {
  a = wideAbs(a);
  b = wideAbs(b);
  while (b != 0) {
    Wide r = a % b;
    a = b;
    b = r;
  }
  return a;
}

Rat ratFromWide(Wide num, Wide den, const char* context) {
  if (den == 0) fail("OutOfRange", std::string(context) + ": zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wideGcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr Wide kMax = std::numeric_limits<Int>::max();
  if (wideAbs(num) > kMax || den > kMax) {
    fail("OutOfRange", std::string(context) + ": rational outside 64-bit range");
  }
  return Rat(static_cast<Int>(num), static_cast<Int>(den));
}

Rat addRat(const Rat& a, const Rat& b) {
  Wide num = Wide(a.numerator()) * b.denominator() + Wide(b.numerator()) * a.denominator();
  Wide den = Wide(a.denominator()) * b.denominator();
  return ratFromWide(num, den, "angle arithmetic");
}

Rat scaleRat(const Rat& q, Wide n) {
  return ratFromWide(Wide(q.numerator()) * n, Wide(q.denominator()), "angle power");
}

// Reduces into [0, 1).
Rat mod1(const Rat& q) {
  Wide num = q.numerator();
  Wide den = q.denominator();
  Wide fl = num >= 0 ? num / den : -((-num + den - 1) / den);
  return ratFromWide(num - fl * den, den, "angle reduction");
}

void canonicalize(CircleAngle& a) {
  a.rationalPart = mod1(a.rationalPart);
  std::sort(a.terms.begin(), a.terms.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::pair<Nat, Rat>> merged;
  for (const auto& [key, coeff] : a.terms) {
    if (!merged.empty() && merged.back().first == key) {
      merged.back().second = addRat(merged.back().second, coeff);
    } else {
      merged.emplace_back(key, coeff);
    }
  }
  std::erase_if(merged, [](const auto& t) { return t.second.numerator() == 0; });
  a.terms = std::move(merged);
}

bool isSquarefree(Nat m) {
  for (Nat p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
  }
  return true;
}

long double angleValue(const CircleAngle& a) {
  long double theta = static_cast<long double>(a.rationalPart.numerator()) /
                      static_cast<long double>(a.rationalPart.denominator());
  for (const auto& [key, coeff] : a.terms) {
    long double q = static_cast<long double>(coeff.numerator()) /
                    static_cast<long double>(coeff.denominator());
    theta += q * sqrtl(static_cast<long double>(key));
  }
  return theta;
}

constexpr long double kPi = 3.14159265358979323846264338327950288L;

std::string ratText(const Rat& q) {
  std::ostringstream out;
  out << q.numerator();
  if (q.denominator() != 1) out << '/' << q.denominator();
  return out.str();
}

std::string termsText(const CircleAngle& a) {
  if (a.terms.empty()) return "0";
  std::string out;
  for (const auto& [key, coeff] : a.terms) {
    if (!out.empty()) out += " + ";
    out += ratText(coeff) + "*sqrt(" + std::to_string(key) + ")";
  }
  return out;
}

std::string floatText(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

CircleAngle angleFromRational(const Rat& q) {
  CircleAngle a;
  a.rationalPart = mod1(q);
  return a;
}

CircleAngle angleZero() { return CircleAngle{}; }

CircleAngle angleSqrt(Nat m) {
  if (m < 2 || !isSquarefree(m)) {
    fail("PreconditionViolated", "angleSqrt needs a squarefree integer >= 2, got " + std::to_string(m));
  }
  CircleAngle a;
  a.terms.emplace_back(m, Rat(1));
  return a;
}

CircleAngle angleMul(const CircleAngle& a, const CircleAngle& b) {
  CircleAngle out;
  out.rationalPart = addRat(a.rationalPart, b.rationalPart);
  out.terms = a.terms;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  canonicalize(out);
  return out;
}

CircleAngle angleInverse(const CircleAngle& a) {
  CircleAngle out;
  out.rationalPart = scaleRat(a.rationalPart, -1);
  out.terms = a.terms;
  for (auto& [key, coeff] : out.terms) coeff = scaleRat(coeff, -1);
  canonicalize(out);
  return out;
}

CircleAngle anglePower(const CircleAngle& z, Nat n) {
  CircleAngle out;
  out.rationalPart = scaleRat(z.rationalPart, static_cast<Wide>(n));
  out.terms = z.terms;
  for (auto& [key, coeff] : out.terms) coeff = scaleRat(coeff, static_cast<Wide>(n));
  canonicalize(out);
  return out;
}

std::pair<double, double> angleCoordinates(const CircleAngle& a) {
  long double theta = angleValue(a);
  theta -= floorl(theta);
  return {static_cast<double>(cosl(2.0L * kPi * theta)),
          static_cast<double>(sinl(2.0L * kPi * theta))};
}

double angleDistance(const CircleAngle& a, const CircleAngle& b) {
  long double delta = angleValue(a) - angleValue(b);
  long double residue = delta - nearbyintl(delta);  // in [-1/2, 1/2]
  return static_cast<double>(2.0L * fabsl(sinl(kPi * residue)));
}

std::string angleText(const CircleAngle& a) {
  std::string out = ratText(a.rationalPart);
  if (!a.terms.empty()) out += " + " + termsText(a);
  return out;
}

CircleAngle parseAngle(std::string_view text) {
  CircleAngle out;
  std::size_t i = 0;
  auto skipSpace = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto parseNat = [&](const char* what) -> Wide {
    if (i >= text.size() || text[i] < '0' || text[i] > '9')
      fail("ParseError", std::string("expected ") + what + " at offset " + std::to_string(i) +
                             " in angle '" + std::string(text) + "'");
    Wide value = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      value = value * 10 + (text[i] - '0');
      if (value > std::numeric_limits<Int>::max())
        fail("ParseError", std::string(what) + " overflows in angle '" + std::string(text) + "'");
      ++i;
    }
    return value;
  };
  auto parseSqrt = [&]() -> Nat {
    // at 's': expect sqrt(<nat>)
    if (text.substr(i, 5).rfind("sqrt(", 0) != 0)
      fail("ParseError", "expected sqrt( at offset " + std::to_string(i) + " in angle '" +
                             std::string(text) + "'");
    i += 5;
    skipSpace();
    Wide m = parseNat("radicand");
    skipSpace();
    if (i >= text.size() || text[i] != ')')
      fail("ParseError", "expected ) at offset " + std::to_string(i) + " in angle '" +
                             std::string(text) + "'");
    ++i;
    return static_cast<Nat>(m);
  };

  bool first = true;
  skipSpace();
  while (true) {
    Wide sign = 1;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (first && text[i] == '+')
        fail("ParseError", "angle cannot start with + in '" + std::string(text) + "'");
      if (text[i] == '-') sign = -1;
      ++i;
      skipSpace();
    } else if (!first) {
      fail("ParseError", "expected + or - between angle terms at offset " + std::to_string(i) +
                             " in '" + std::string(text) + "'");
    }
    if (!first && i < text.size() && text[i] == '-') {
      // angleText renders negative coefficients as `+ -q*sqrt(m)`.
      sign = -sign;
      ++i;
      skipSpace();
    }
    first = false;

    Rat coeff(1);
    bool haveRadical = false;
    Nat radicand = 0;
    if (i < text.size() && text[i] == 's') {
      haveRadical = true;
      radicand = parseSqrt();
    } else {
      Wide num = parseNat("numerator");
      Wide den = 1;
      skipSpace();
      if (i < text.size() && text[i] == '/') {
        ++i;
        skipSpace();
        den = parseNat("denominator");
        if (den == 0) fail("ParseError", "zero denominator in angle '" + std::string(text) + "'");
        skipSpace();
      }
      coeff = ratFromWide(num, den, "angle literal");
      if (i < text.size() && text[i] == '*') {
        ++i;
        skipSpace();
        haveRadical = true;
        radicand = parseSqrt();
      }
    }
    coeff = scaleRat(coeff, sign);

    if (haveRadical && radicand >= 2) {
      // Fold square factors into the coefficient: sqrt(s^2 * q) = s*sqrt(q).
      Nat core = radicand;
      Wide mult = 1;
      for (Nat p = 2; p * p <= core; ++p) {
        while (core % (p * p) == 0) {
          core /= p * p;
          mult *= p;
        }
      }
      coeff = scaleRat(coeff, mult);
      if (core == 1) {
        out.rationalPart = addRat(out.rationalPart, coeff);
      } else {
        out.terms.emplace_back(core, coeff);
      }
    } else if (!haveRadical || radicand == 1) {
      out.rationalPart = addRat(out.rationalPart, coeff);
    }
    // sqrt(0) contributes nothing.

    skipSpace();
    if (i >= text.size()) break;
    if (text[i] != '+' && text[i] != '-')
      fail("ParseError", "unexpected character '" + std::string(1, text[i]) + "' at offset " +
                             std::to_string(i) + " in angle '" + std::string(text) + "'");
  }
  canonicalize(out);
  return out;
}

ZAssignment::ZAssignment(std::vector<Ordinal> session) : session_(std::move(session)) {
  std::sort(session_.begin(), session_.end());
  session_.erase(std::unique(session_.begin(), session_.end()), session_.end());
  squarefrees_.reserve(session_.size());
  Nat candidate = 2;
  for (std::size_t i = 0; i < session_.size(); ++i) {
    while (!isSquarefree(candidate)) ++candidate;
    squarefrees_.push_back(candidate);
    ++candidate;
  }
}

Nat ZAssignment::squarefreeOf(const Ordinal& alpha) const {
  auto it = std::lower_bound(session_.begin(), session_.end(), alpha);
  if (it == session_.end() || !(*it == alpha)) {
    fail("UnassignedOrdinal", "no angle assigned to " + alpha.str());
  }
  return squarefrees_[static_cast<std::size_t>(it - session_.begin())];
}

CircleAngle ZAssignment::angleOf(const Ordinal& alpha) const {
  return angleSqrt(squarefreeOf(alpha));
}

bool ZAssignment::contains(const Ordinal& alpha) const {
  return std::binary_search(session_.begin(), session_.end(), alpha);
}

CircleAngle mooreColor(const Ordinal& alpha, const Ordinal& beta, const ZAssignment& Z,
                       const walks::ESystem& sys, const walks::CSequence& C) {
  if (alpha.isZero() || !(alpha < beta)) {
    fail("OutOfRange", "pair colour needs 1 <= alpha < beta, got alpha=" + alpha.str() +
                           " beta=" + beta.str());
  }
  CircleAngle base = Z.angleOf(alpha);
  Nat osc = walks::oscOrdinal(sys, alpha, beta, C).value;
  return anglePower(base, osc + 1);
}

CircleAngle wPoint(const Ordinal& beta, const Ordinal& xi, const ZAssignment& Z,
                   const walks::ESystem& sys, const walks::CSequence& C) {
  if (xi.isZero() || !(xi < beta)) return angleZero();
  return mooreColor(xi, beta, Z, sys, C);
}

Nat kroneckerSearch(const std::vector<CircleAngle>& z, const std::vector<CircleAngle>& u,
                    const std::vector<CircleAngle>& v, double eps, Nat cap) {
  if (z.size() != u.size() || z.size() != v.size()) {
    fail("LengthMismatch", "kronecker search needs z, u, v of one length");
  }
  if (!(eps > 0.0)) fail("PreconditionViolated", "kronecker search needs eps > 0");
  for (Nat m = 0; m < cap; ++m) {
    bool all = true;
    for (std::size_t i = 0; i < z.size(); ++i) {
      CircleAngle moved = angleMul(u[i], anglePower(z[i], m));
      if (!(angleDistance(moved, v[i]) < eps)) {
        all = false;
        break;
      }
    }
    if (all) return m;
  }
  fail("CapExceeded", "no power below " + std::to_string(cap) + " lands in every target");
}

std::vector<SampleRow> sampleLSpace(const std::vector<Ordinal>& X, const std::vector<Ordinal>& B,
                                    const ZAssignment& Z, const walks::ESystem& sys,
                                    const walks::CSequence& C) {
  std::vector<SampleRow> rows;
  rows.reserve(X.size() * B.size());
  for (const Ordinal& beta : B) {
    for (const Ordinal& xi : X) {
      SampleRow row;
      row.beta = beta;
      row.xi = xi;
      row.angle = wPoint(beta, xi, Z, sys, C);
      auto [x, y] = angleCoordinates(row.angle);
      row.x = x;
      row.y = y;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string sampleCsv(const std::vector<SampleRow>& rows) {
  std::string out = "beta,xi,angle_rational,angle_terms,x,y\n";
  for (const SampleRow& row : rows) {
    out += row.beta.str() + ',' + row.xi.str() + ',' + ratText(row.angle.rationalPart) + ',' +
           termsText(row.angle) + ',' + floatText(row.x) + ',' + floatText(row.y) + '\n';
  }
  return out;
}

NeighborhoodReport neighborhoodHit(const std::vector<std::vector<Ordinal>>& A,
                                   const std::vector<std::vector<Ordinal>>& B,
                                   const std::vector<CircleAngle>& targets, double eps,
                                   const std::vector<std::size_t>& phi, const ZAssignment& Z,
                                   const walks::ESystem& sys, const walks::CSequence& C, Nat cap) {
  const std::size_t k = targets.size();
  if (k == 0 || phi.size() != k) {
    fail("PreconditionViolated", "neighbourhood search needs matching nonempty targets and phi");
  }
  if (!(eps > 0.0)) fail("PreconditionViolated", "neighbourhood search needs eps > 0");
  for (const auto& a : A) {
    if (a.size() != k) fail("PreconditionViolated", "every a-tuple must match the target count");
  }
  for (const auto& b : B) {
    if (b.empty()) fail("PreconditionViolated", "b-tuples must be nonempty");
    for (std::size_t idx : phi) {
      if (idx >= b.size()) fail("PreconditionViolated", "phi indexes past a b-tuple");
    }
  }

  NeighborhoodReport report;
  for (const auto& a : A) {
    const Ordinal& aMax = *std::max_element(a.begin(), a.end());
    for (const auto& b : B) {
      const Ordinal& bMin = *std::min_element(b.begin(), b.end());
      if (!(aMax < bMin)) continue;
      if (report.pairsExamined >= cap) return report;
      ++report.pairsExamined;

      std::vector<CircleAngle> colors;
      colors.reserve(k);
      double worst = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        CircleAngle color = wPoint(b[phi[i]], a[i], Z, sys, C);
        worst = std::max(worst, angleDistance(color, targets[i]));
        colors.push_back(std::move(color));
      }
      if (worst < eps) {
        report.hit = true;
        report.a = a;
        report.b = b;
        report.colors = std::move(colors);
        return report;
      }
      if (!report.hasNearestMiss || worst < report.nearestMiss) {
        report.hasNearestMiss = true;
        report.nearestMiss = worst;
        report.nearestA = a;
        report.nearestB = b;
      }
    }
  }
  return report;
}

}  // namespace osc::lspace
