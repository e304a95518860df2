#pragma once

#include "gea/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gea {

/// Dense univariate polynomial in t over Q, ascending powers. The zero
/// polynomial is the empty vector; otherwise the leading coefficient is
/// nonzero.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

  static Poly constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }
  static Poly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  /// Coefficient of t^i, zero past the degree.
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& lead() const { return c_.back(); }

  Rational eval(const Rational& t) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Ascending powers with canonical signs, e.g. "1-2*t-3*t^2".
  std::string to_string(const char* var = "t") const;

private:
  void trim();
  std::vector<Rational> c_;
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, Poly a);

struct PolyDivision {
  Poly quotient;
  Poly remainder;
};

PolyDivision divmod(const Poly& a, const Poly& b);

/// a / b where b is known to divide a. Throws InternalError otherwise.
Poly exact_div(const Poly& a, const Poly& b);

/// Scales to leading coefficient 1; zero stays zero.
Poly monic(const Poly& p);

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Reduced ratio num/den of polynomials in t.
///
/// Invariants: den != 0; gcd(num, den) = 1; den(0) = 1 when den(0) != 0,
/// otherwise den is monic. The zero function is 0/1. Only rf_normalize
/// builds values, so every instance satisfies these.
class RationalFunction {
public:
  RationalFunction() : den_(Poly::constant(1)) {}

  const Poly& num() const noexcept { return num_; }
  const Poly& den() const noexcept { return den_; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// "(1-t)/(1-2*t-3*t^2)"; the denominator is omitted when it is 1.
  std::string to_string(const char* var = "t") const;

private:
  friend RationalFunction rf_normalize(Poly num, Poly den);
  Poly num_;
  Poly den_;
};

/// Throws DomainError on a zero denominator.
RationalFunction rf_normalize(Poly num, Poly den);

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g);
RationalFunction operator-(const RationalFunction& f, const RationalFunction& g);
RationalFunction operator*(const RationalFunction& f, const RationalFunction& g);

/// Maclaurin coefficients of t^0 ... t^N, driven by the linear recursion that
/// den imposes. Throws DomainError when den(0) = 0.
std::vector<Rational> series(const RationalFunction& f, long N);

using PolyMatrix = std::vector<std::vector<Poly>>;

/// Solution of M x = rhs as x_i = numerators[i] / det, straight from
/// fraction-free elimination, before any gcd reduction.
struct CramerSolution {
  Poly det;
  std::vector<Poly> numerators;
};

/// Bareiss elimination over Q[t] with row pivoting on nonzero entries.
///
/// max_det_degree, when set, is an internal-consistency cap: a determinant
/// of larger degree means the caller's system was built wrong, and
/// InternalError is raised. Throws DomainError on a shape mismatch and
/// SingularMatrixError when det(M) is the zero polynomial.
CramerSolution solve_fraction_free(const PolyMatrix& M, const std::vector<Poly>& rhs,
                                   std::optional<long> max_det_degree = std::nullopt);

struct LinearSolution {
  std::vector<RationalFunction> x;
  Poly det;
};

/// Exact solution of M x = rhs with every entry reduced by rf_normalize.
LinearSolution solve_linear_system(const PolyMatrix& M, const std::vector<Poly>& rhs,
                                   std::optional<long> max_det_degree = std::nullopt);

}  // namespace gea
