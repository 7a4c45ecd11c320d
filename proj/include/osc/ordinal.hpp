#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "osc/errors.hpp"

namespace osc::ord {

// An ordinal below epsilon_0 in Cantor normal form:
//   w^{e_1}*c_1 + ... + w^{e_m}*c_m,  e_1 > e_2 > ... > e_m,  c_i >= 1,
// stored as the term list (empty list = 0). Exponents are ordinals of the
// same kind, so the representation is a finite tree.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero

  static Ordinal nat(std::uint64_t n);
  static Ordinal omega();
  static Ordinal omegaPow(const Ordinal& exponent, std::uint64_t coeff = 1);
  // Validates CNF shape; throws NotCNF on ascending/equal exponents or a
  // zero coefficient.
  static Ordinal fromTerms(std::vector<Term> terms);

  // Grammar:  ordinal := '0' | term ('+' term)*
  //           term    := 'w' ['^' '(' ordinal ')'] ['*' nat] | nat (>= 1)
  // Whitespace between tokens is ignored. Syntax errors throw ParseError;
  // well-formed input that breaks CNF order throws NotCNF.
  static Ordinal parse(std::string_view text);
  std::string str() const;

  const std::vector<Term>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isFinite() const;
  std::uint64_t finiteValue() const;  // pre: isFinite()
  bool isSuccessor() const;
  bool isLimit() const;

  Ordinal succ() const;
  Ordinal pred() const;  // pre: isSuccessor(); otherwise throws OutOfRange

  static int cmp(const Ordinal& a, const Ordinal& b);  // -1 / 0 / +1
  // Ordinal addition in CNF (left absorption).
  Ordinal add(const Ordinal& other) const;
  // The unique d with a + d = b when a <= b in the left-subtraction sense;
  // nullopt when a > b.
  static std::optional<Ordinal> leftDifference(const Ordinal& a, const Ordinal& b);

  std::size_t hash() const noexcept;

  bool operator==(const Ordinal& o) const { return cmp(*this, o) == 0; }
  bool operator!=(const Ordinal& o) const { return cmp(*this, o) != 0; }
  bool operator<(const Ordinal& o) const { return cmp(*this, o) < 0; }
  bool operator<=(const Ordinal& o) const { return cmp(*this, o) <= 0; }
  bool operator>(const Ordinal& o) const { return cmp(*this, o) > 0; }
  bool operator>=(const Ordinal& o) const { return cmp(*this, o) >= 0; }

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

struct OrdinalHash {
  std::size_t operator()(const Ordinal& o) const noexcept { return o.hash(); }
};

}  // namespace osc::ord
