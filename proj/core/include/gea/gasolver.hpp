#pragma once

#include "gea/cfinite.hpp"
#include "gea/laurent.hpp"
#include "gea/ratfun.hpp"

#include <vector>

namespace gea {

/// Generating functions f_{k,a}(t) = sum_n A(n,k,a) t^n for a = 0 ... k-1,
/// where A(n,k,a) sums the coefficients of P^n at exponents congruent to a
/// modulo k.
///
/// common_den is det(I - tM) normalized to constant term 1 and left
/// unreduced; each gfs[a] is reduced, so its denominator divides common_den.
struct GASolution {
  LaurentPoly P;
  long k = 0;
  std::vector<RationalFunction> gfs;
  Poly common_den;
  bool symmetric = false;

  friend bool operator==(const GASolution&, const GASolution&) = default;
};

/// Representative of a mod k in [0, k) whatever the sign of a.
constexpr long floor_mod(long a, long k) noexcept {
  long r = a % k;
  return r < 0 ? r + k : r;
}

/// A(n,k,a) by expanding P^n directly. Independent of the linear-system path.
Rational residue_sum(const LaurentPoly& P, long k, long a, long n);

/// All residue sums A(n,k,a) for 0 <= a < k from one expanded power.
std::vector<Rational> residue_sums(const LaurentPoly& power, long k);

/// The k x k matrix M with M[a][b] = sum of c_i over i == a - b (mod k),
/// i.e. the one-step transfer between residue classes.
std::vector<std::vector<Rational>> transfer_matrix(const LaurentPoly& P, long k);

/// Solves (I - tM) f = e_0 exactly.
GASolution ga(const LaurentPoly& P, long k);

/// Same content as ga for symmetric P, exploiting f_{k,a} = f_{k,k-a}: only
/// a <= k/2 is reduced and the rest mirrored. DomainError if P is not
/// symmetric.
GASolution gas(const LaurentPoly& P, long k);

/// The recurrence that common_den = 1 - d_1 t - ... - d_r t^r encodes, with
/// the initial values of class a. Starts at n = r unless the class's
/// numerator degree forces a longer prefix.
LinearRecurrence recurrence_of(const GASolution& sol, long a);

/// recurrence_of for every residue class; all share rec_coeffs.
std::vector<LinearRecurrence> recurrence_of(const GASolution& sol);

}  // namespace gea
