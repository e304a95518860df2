#include "gea/ratfun.hpp"

#include "gea/error.hpp"

#include <algorithm>
#include <utility>

namespace gea {

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

Poly Poly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Poly::eval(const Rational& t) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::string Poly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    if (i == 0) {
      out += gea::to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += gea::to_string(mag);
      out += '*';
    }
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

Poly operator+(Poly a, const Poly& b) { return a += b; }
Poly operator-(Poly a, const Poly& b) { return a -= b; }
Poly operator-(const Poly& a) { return Rational(-1) * a; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Rational> z(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) z[i + j] += x[i] * y[j];
  }
  return Poly(std::move(z));
}

Poly operator*(const Rational& s, Poly a) { return a *= s; }

PolyDivision divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly{}, a};
  std::vector<Rational> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  std::vector<Rational> q(rem.size() - db);
  const Rational inv_lead = 1 / b.lead();
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = rem[i + db] * inv_lead;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j)
      if (d[j] != 0) rem[i + j] -= c * d[j];
    q[i] = std::move(c);
  }
  rem.resize(db);
  return {Poly(std::move(q)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero())
    throw InternalError("exact_div: " + b.to_string() + " does not divide " + a.to_string());
  return q;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return (1 / p.lead()) * p;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = monic(a);
  Poly y = monic(b);
  while (!y.is_zero()) {
    Poly r = divmod(x, y).remainder;
    x = std::move(y);
    y = monic(r);
  }
  return x;
}

RationalFunction rf_normalize(Poly num, Poly den) {
  if (den.is_zero()) throw DomainError("rational function with zero denominator");
  RationalFunction f;
  if (num.is_zero()) return f;
  Poly g = poly_gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  Rational scale = den.coeff(0) != 0 ? Rational(den.coeff(0)) : den.lead();
  Rational inv = 1 / scale;
  f.num_ = inv * std::move(num);
  f.den_ = inv * std::move(den);
  return f;
}

RationalFunction operator+(const RationalFunction& f, const RationalFunction& g) {
  return rf_normalize(f.num() * g.den() + g.num() * f.den(), f.den() * g.den());
}

RationalFunction operator-(const RationalFunction& f, const RationalFunction& g) {
  return rf_normalize(f.num() * g.den() - g.num() * f.den(), f.den() * g.den());
}

RationalFunction operator*(const RationalFunction& f, const RationalFunction& g) {
  return rf_normalize(f.num() * g.num(), f.den() * g.den());
}

std::string RationalFunction::to_string(const char* var) const {
  auto wrap = [&](const Poly& p) {
    std::string s = p.to_string(var);
    bool single_term = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                     [](const Rational& c) { return c != 0; }) <= 1;
    return single_term ? s : "(" + s + ")";
  };
  if (den_ == Poly::constant(1)) return num_.to_string(var);
  return wrap(num_) + "/" + wrap(den_);
}

std::vector<Rational> series(const RationalFunction& f, long N) {
  if (N < 0) throw DomainError("series: negative truncation order");
  const auto& d = f.den().coeffs();
  if (d.empty() || d[0] == 0)
    throw DomainError("series: " + f.to_string() + " is not a power series at the origin");
  const Rational inv0 = 1 / d[0];
  std::vector<Rational> s(static_cast<std::size_t>(N) + 1);
  for (std::size_t n = 0; n < s.size(); ++n) {
    Rational acc = f.num().coeff(n);
    const std::size_t top = std::min(n, d.size() - 1);
    for (std::size_t j = 1; j <= top; ++j)
      if (d[j] != 0) acc -= d[j] * s[n - j];
    s[n] = acc * inv0;
  }
  return s;
}

CramerSolution solve_fraction_free(const PolyMatrix& M, const std::vector<Poly>& rhs,
                                   std::optional<long> max_det_degree) {
  const std::size_t n = M.size();
  if (rhs.size() != n) throw DomainError("solve_linear_system: rhs length does not match matrix size");
  for (const auto& row : M)
    if (row.size() != n) throw DomainError("solve_linear_system: matrix is not square");
  if (n == 0) return {Poly::constant(1), {}};

  // Augmented matrix; column n holds the right-hand side.
  std::vector<std::vector<Poly>> A(n);
  for (std::size_t i = 0; i < n; ++i) {
    A[i] = M[i];
    A[i].push_back(rhs[i]);
  }

  bool flipped = false;
  Poly prev = Poly::constant(1);
  for (std::size_t s = 0; s < n; ++s) {
    if (A[s][s].is_zero()) {
      std::size_t p = s + 1;
      while (p < n && A[p][s].is_zero()) ++p;
      if (p == n) throw SingularMatrixError("solve_linear_system: matrix is singular");
      std::swap(A[s], A[p]);
      flipped = !flipped;
    }
    const Poly& pivot = A[s][s];
    const bool trivial_scale = pivot == prev;
    for (std::size_t i = s + 1; i < n; ++i) {
      const Poly& lead = A[i][s];
      for (std::size_t j = s + 1; j <= n; ++j) {
        Poly& a = A[i][j];
        const Poly& b = A[s][j];
        if (lead.is_zero() || b.is_zero()) {
          // Only the pivot scaling survives: a <- pivot * a / prev.
          if (a.is_zero() || trivial_scale) continue;
          a = exact_div(pivot * a, prev);
        } else {
          a = exact_div(pivot * a - lead * b, prev);
        }
      }
      A[i][s] = Poly{};
    }
    prev = A[s][s];
  }

  // Bareiss leaves the determinant of the row-permuted system in the corner.
  const Poly D = A[n - 1][n - 1];
  if (max_det_degree && D.degree() > *max_det_degree)
    throw InternalError("solve_linear_system: determinant degree " + std::to_string(D.degree()) +
                        " exceeds the expected bound " + std::to_string(*max_det_degree));

  // Fraction-free back substitution: X_i = D x_i is a polynomial (Cramer).
  std::vector<Poly> X(n);
  for (std::size_t i = n; i-- > 0;) {
    Poly acc = D * A[i][n];
    for (std::size_t j = i + 1; j < n; ++j)
      if (!A[i][j].is_zero() && !X[j].is_zero()) acc -= A[i][j] * X[j];
    X[i] = exact_div(acc, A[i][i]);
  }

  CramerSolution out{D, std::move(X)};
  if (flipped) {
    out.det = -out.det;
    for (auto& x : out.numerators) x = -x;
  }
  return out;
}

LinearSolution solve_linear_system(const PolyMatrix& M, const std::vector<Poly>& rhs,
                                   std::optional<long> max_det_degree) {
  CramerSolution cs = solve_fraction_free(M, rhs, max_det_degree);
  LinearSolution out;
  out.det = cs.det;
  out.x.reserve(cs.numerators.size());
  for (auto& num : cs.numerators) out.x.push_back(rf_normalize(std::move(num), cs.det));
  return out;
}

}  // namespace gea
