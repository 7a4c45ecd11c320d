#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "osc/errors.hpp"
#include "osc/ordinal.hpp"
#include "osc/walks.hpp"

// Circle-valued colourings: exact angles built from rationals and square
// roots of squarefree integers, the colouring z_alpha^(osc+1), the w_beta
// point family, Kronecker approximation search, and a neighbourhood-hitting
// search over tuple families.
namespace osc::lspace {

using Nat = std::uint64_t;
using osc::ord::Ordinal;
using Rat = boost::rational<std::int64_t>;

// A point exp(2*pi*i * theta) with theta = rationalPart + sum q * sqrt(m)
// over the terms. Canonical form: rationalPart in [0,1), term keys
// squarefree, strictly increasing, >= 2, with nonzero rational coefficients.
// Rationals and square roots of distinct squarefree integers are linearly
// independent over the rationals, so equality of canonical forms decides
// equality on the circle exactly. Build values through the factories and
// operations below, which keep the form canonical.
struct CircleAngle {
  Rat rationalPart{0};
  std::vector<std::pair<Nat, Rat>> terms;  // key m -> coefficient q

  bool operator==(const CircleAngle&) const = default;
};

// The rational angle q (mod 1). angleZero() is the circle's unit.
CircleAngle angleFromRational(const Rat& q);
CircleAngle angleZero();
// The angle sqrt(m) for squarefree m >= 2 (PreconditionViolated otherwise).
CircleAngle angleSqrt(Nat m);

// Point product (angles add) and inverse (angle negates); exact.
CircleAngle angleMul(const CircleAngle& a, const CircleAngle& b);
CircleAngle angleInverse(const CircleAngle& a);

// z^n: every coefficient scaled by n, the rational part reduced mod 1;
// exact. Fails with OutOfRange if a scaled coefficient leaves 64-bit range.
CircleAngle anglePower(const CircleAngle& z, Nat n);

// Unit-circle coordinates (cos, sin of 2*pi*theta), and the chordal distance
// |p_a - p_b| = 2*|sin(pi*(theta_a - theta_b))|. Floating point, with error
// below 1e-9 for coefficient magnitudes up to 1e6.
std::pair<double, double> angleCoordinates(const CircleAngle& a);
double angleDistance(const CircleAngle& a, const CircleAngle& b);

// Canonical text: `q0 + q1*sqrt(m1) + ...` (just `q0` when no terms).
std::string angleText(const CircleAngle& a);

// Inverse of angleText, with conveniences: terms are rationals, sqrt(m), or
// q*sqrt(m), joined by + or -; square factors of radicands fold into the
// coefficient (sqrt(8) reads as 2*sqrt(2)); sqrt(0) = 0 and sqrt(1) = 1.
// Fails with ParseError on anything else.
CircleAngle parseAngle(std::string_view text);

// Session ordinals mapped injectively to squarefree integers: the k-th
// ordinal in increasing order receives the k-th squarefree integer >= 2, and
// its angle is sqrt of that integer. Distinct square roots are rationally
// independent, so every session yields rationally independent angles.
class ZAssignment {
 public:
  explicit ZAssignment(std::vector<Ordinal> session);

  // Fails with UnassignedOrdinal for ordinals outside the session.
  Nat squarefreeOf(const Ordinal& alpha) const;
  CircleAngle angleOf(const Ordinal& alpha) const;
  bool contains(const Ordinal& alpha) const;

  const std::vector<Ordinal>& session() const { return session_; }

 private:
  std::vector<Ordinal> session_;     // sorted, distinct
  std::vector<Nat> squarefrees_;     // aligned with session_
};

// The colour of the pair: z_alpha raised to oscillation(alpha, beta) + 1.
// Pre: 1 <= alpha < beta (OutOfRange) and alpha in the session
// (UnassignedOrdinal).
CircleAngle mooreColor(const Ordinal& alpha, const Ordinal& beta, const ZAssignment& Z,
                       const walks::ESystem& sys, const walks::CSequence& C);

// The beta-th point family evaluated at xi: the pair colour when
// 1 <= xi < beta, and the unit (angle 0) when xi >= beta or xi = 0 — the
// xi = 0 case is a convention, since colours need alpha >= 1.
CircleAngle wPoint(const Ordinal& beta, const Ordinal& xi, const ZAssignment& Z,
                   const walks::ESystem& sys, const walks::CSequence& C);

// Least m < cap such that every u_i * z_i^m lies within eps (chordal) of
// v_i. The sequences must share one length (LengthMismatch); eps must be
// positive (PreconditionViolated). Fails with CapExceeded when no m below
// the cap works.
Nat kroneckerSearch(const std::vector<CircleAngle>& z, const std::vector<CircleAngle>& u,
                    const std::vector<CircleAngle>& v, double eps, Nat cap);

// One evaluated point of the restriction family.
struct SampleRow {
  Ordinal beta;
  Ordinal xi;
  CircleAngle angle;
  double x = 1.0;
  double y = 0.0;
};

// Evaluates wPoint(beta, xi) over B x X, in the given orders.
std::vector<SampleRow> sampleLSpace(const std::vector<Ordinal>& X, const std::vector<Ordinal>& B,
                                    const ZAssignment& Z, const walks::ESystem& sys,
                                    const walks::CSequence& C);

// CSV with header `beta,xi,angle_rational,angle_terms,x,y`.
std::string sampleCsv(const std::vector<SampleRow>& rows);

// Search over pairs of tuples (a from A, b from B) with max(a) < min(b) for
// one whose colours all land in their targets: for each coordinate i the
// colour of (a[i], b[phi[i]]) must lie within eps of targets[i]. Colours are
// taken through wPoint, so a zero entry in a contributes the unit angle.
struct NeighborhoodReport {
  bool hit = false;
  Nat pairsExamined = 0;
  // The hitting pair and its colours, when found.
  std::optional<std::vector<Ordinal>> a;
  std::optional<std::vector<Ordinal>> b;
  std::vector<CircleAngle> colors;
  // Best miss over examined pairs: the smallest worst-coordinate distance.
  double nearestMiss = 0.0;
  bool hasNearestMiss = false;
  std::optional<std::vector<Ordinal>> nearestA;
  std::optional<std::vector<Ordinal>> nearestB;
};

// Shapes are validated (every a-tuple matches targets and phi in length,
// phi indexes into b-tuples; PreconditionViolated otherwise). At most cap
// admissible pairs are examined; running out of pairs or cap yields an
// exhaustion report, never an error.
NeighborhoodReport neighborhoodHit(const std::vector<std::vector<Ordinal>>& A,
                                   const std::vector<std::vector<Ordinal>>& B,
                                   const std::vector<CircleAngle>& targets, double eps,
                                   const std::vector<std::size_t>& phi, const ZAssignment& Z,
                                   const walks::ESystem& sys, const walks::CSequence& C, Nat cap);

}  // namespace osc::lspace
