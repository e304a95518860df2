#pragma once

#include "gea/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gea {

/// Laurent polynomial sum_i c_i x^i with exact rational coefficients, stored
/// densely over its support [min_exp, max_exp].
///
/// Canonical form: the first and last stored coefficients are nonzero, and
/// the zero polynomial is the empty vector with min_exp = 0. Every
/// constructor canonicalizes, so two equal polynomials compare equal
/// member-wise.
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(long min_exp, std::vector<Rational> coeffs);

  static LaurentPoly zero() { return {}; }
  static LaurentPoly one() { return constant(Rational(1)); }
  static LaurentPoly constant(const Rational& c) { return monomial(c, 0); }
  static LaurentPoly monomial(const Rational& c, long exponent);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  long min_exp() const noexcept { return min_exp_; }
  /// min_exp - 1 for the zero polynomial.
  long max_exp() const noexcept { return min_exp_ + static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of x^j; exactly zero outside the support.
  Rational coeff(long j) const;

  /// True iff coeff(j) == coeff(-j) for all j.
  bool is_symmetric() const;

  /// Exact value at a nonzero rational (zero is allowed when min_exp >= 0).
  Rational eval_at(const Rational& v) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Human-readable form in ascending exponents, e.g. "x^-1+1+x".
  std::string to_string() const;

private:
  void canonicalize();

  long min_exp_ = 0;
  std::vector<Rational> coeffs_;
};

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);

/// n-th power by iterated multiplication; pow(p, 0) == 1 for every p,
/// including the zero polynomial (empty product).
LaurentPoly pow(const LaurentPoly& p, long n);

/// Every power P^0 ... P^n_max, each obtained from its predecessor by one
/// multiplication.
std::vector<LaurentPoly> powers(const LaurentPoly& p, long n_max);

/// Parses the textual grammar
///   expression  ::= term (('+'|'-') term)*
///   term        ::= coefficient ['*'] 'x' ['^' integer] | coefficient | 'x' ['^' integer]
///   coefficient ::= integer | integer '/' positive-integer
/// with whitespace ignored and an optional leading sign. Throws ParseError
/// carrying the offending position.
LaurentPoly parse_laurent(std::string_view text);

/// x^-1 + 1 + x
LaurentPoly trinomial();

}  // namespace gea
