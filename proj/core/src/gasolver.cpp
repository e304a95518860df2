#include "gea/gasolver.hpp"

#include "gea/error.hpp"

#include <string>

namespace gea {

namespace {

void check_k(long k) {
  if (k < 1) throw DomainError("k must be a positive integer, got " + std::to_string(k));
}

}  // namespace

std::vector<Rational> residue_sums(const LaurentPoly& power, long k) {
  check_k(k);
  std::vector<Rational> out(static_cast<std::size_t>(k));
  const auto& c = power.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    out[static_cast<std::size_t>(floor_mod(power.min_exp() + static_cast<long>(i), k))] += c[i];
  return out;
}

Rational residue_sum(const LaurentPoly& P, long k, long a, long n) {
  check_k(k);
  if (a < 0 || a >= k) throw DomainError("residue a must satisfy 0 <= a < k");
  if (n < 0) throw DomainError("n must be nonnegative");
  return residue_sums(pow(P, n), k)[static_cast<std::size_t>(a)];
}

std::vector<std::vector<Rational>> transfer_matrix(const LaurentPoly& P, long k) {
  check_k(k);
  std::vector<std::vector<Rational>> M(static_cast<std::size_t>(k), std::vector<Rational>(static_cast<std::size_t>(k)));
  const auto& c = P.coeffs();
  for (std::size_t idx = 0; idx < c.size(); ++idx) {
    if (c[idx] == 0) continue;
    const long i = P.min_exp() + static_cast<long>(idx);
    // f_a picks up c_i f_{(a-i) mod k}, so b = a - i.
    for (long a = 0; a < k; ++a)
      M[static_cast<std::size_t>(a)][static_cast<std::size_t>(floor_mod(a - i, k))] += c[idx];
  }
  return M;
}

namespace {

struct RawSolution {
  Poly common_den;
  std::vector<Poly> numerators;  // f_a = numerators[a] / common_den
};

RawSolution solve_system(const LaurentPoly& P, long k) {
  if (P.is_zero()) throw DomainError("P must be a nonzero Laurent polynomial");
  check_k(k);
  const auto M = transfer_matrix(P, k);
  const auto n = static_cast<std::size_t>(k);
  PolyMatrix A(n, std::vector<Poly>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Rational entry = (a == b ? Rational(1) : Rational(0));
      A[a][b] = Poly({entry, Rational(-M[a][b])});
    }
  std::vector<Poly> rhs(n);
  rhs[0] = Poly::constant(1);

  CramerSolution cs;
  try {
    cs = solve_fraction_free(A, rhs, k);
  } catch (const SingularMatrixError&) {
    throw InternalError("I - tM is singular, but it is the identity at t = 0");
  }
  // det(I - tM) is 1 at t = 0; the sign is fixed by the identity, no scaling needed.
  if (cs.det.coeff(0) != 1) throw InternalError("det(I - tM) does not have constant term 1");
  for (const auto& num : cs.numerators)
    if (num.degree() > k - 1)
      throw InternalError("Cramer numerator degree " + std::to_string(num.degree()) + " exceeds k - 1");
  return {std::move(cs.det), std::move(cs.numerators)};
}

}  // namespace

GASolution ga(const LaurentPoly& P, long k) {
  RawSolution raw = solve_system(P, k);
  GASolution sol;
  sol.P = P;
  sol.k = k;
  sol.symmetric = P.is_symmetric();
  sol.gfs.reserve(raw.numerators.size());
  for (auto& num : raw.numerators) sol.gfs.push_back(rf_normalize(std::move(num), raw.common_den));
  sol.common_den = std::move(raw.common_den);
  return sol;
}

GASolution gas(const LaurentPoly& P, long k) {
  if (!P.is_symmetric())
    throw DomainError("gas requires a symmetric P (P(x) = P(1/x)); use ga for " + P.to_string());
  RawSolution raw = solve_system(P, k);
  GASolution sol;
  sol.P = P;
  sol.k = k;
  sol.symmetric = true;
  sol.gfs.resize(static_cast<std::size_t>(k));
  for (long a = 0; a <= k / 2; ++a) {
    const long mirror = floor_mod(-a, k);
    if (raw.numerators[static_cast<std::size_t>(a)] != raw.numerators[static_cast<std::size_t>(mirror)])
      throw InternalError("symmetric P but f_{k,a} != f_{k,k-a} for a = " + std::to_string(a));
    sol.gfs[static_cast<std::size_t>(a)] = rf_normalize(raw.numerators[static_cast<std::size_t>(a)], raw.common_den);
    sol.gfs[static_cast<std::size_t>(mirror)] = sol.gfs[static_cast<std::size_t>(a)];
  }
  sol.common_den = std::move(raw.common_den);
  return sol;
}

LinearRecurrence recurrence_of(const GASolution& sol, long a) {
  if (a < 0 || a >= sol.k) throw DomainError("residue a must satisfy 0 <= a < k");
  const Poly& den = sol.common_den;
  const long r = den.degree();
  LinearRecurrence rec;
  for (long j = 1; j <= r; ++j) rec.rec_coeffs.push_back(-den.coeff(static_cast<std::size_t>(j)));

  // f_a = N/D with D | common_den, i.e. (N * common_den/D) / common_den. The
  // recurrence holds once n exceeds the degree of that unreduced numerator.
  const RationalFunction& f = sol.gfs[static_cast<std::size_t>(a)];
  const long unreduced_num_degree = f.num().is_zero() ? -1 : f.num().degree() + r - f.den().degree();
  const long start = std::max(r, unreduced_num_degree + 1);
  if (start > 0) rec.initials = series(f, start - 1);
  return rec;
}

std::vector<LinearRecurrence> recurrence_of(const GASolution& sol) {
  std::vector<LinearRecurrence> out;
  out.reserve(static_cast<std::size_t>(sol.k));
  for (long a = 0; a < sol.k; ++a) out.push_back(recurrence_of(sol, a));
  return out;
}

}  // namespace gea
