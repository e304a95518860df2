#include <doctest.h>

#include "gea/error.hpp"
#include "gea/gasolver.hpp"
#include "test_helpers.hpp"

#include <random>
#include <set>

using namespace gea;
using testing_support::Q;
using testing_support::to_laurent;

namespace {

Poly P(std::initializer_list<long> c) { return Poly(Q(c)); }

void check_solution_invariants(const GASolution& sol) {
  REQUIRE(static_cast<long>(sol.gfs.size()) == sol.k);
  CHECK(sol.common_den.degree() <= sol.k);
  CHECK(sol.common_den.coeff(0) == 1);
  for (const auto& f : sol.gfs) {
    CHECK(divmod(sol.common_den, f.den()).remainder.is_zero());
    CHECK(f.num().degree() <= sol.k - 1);
  }
  if (sol.symmetric)
    for (long a = 1; a < sol.k; ++a) CHECK(sol.gfs[static_cast<std::size_t>(a)] == sol.gfs[static_cast<std::size_t>(sol.k - a)]);
}

oracle::Terms random_symmetric(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> half(0, 3), coef(-3, 3);
  for (;;) {
    oracle::Terms t;
    const int h = half(rng);
    for (int i = 0; i <= h; ++i) {
      const int c = coef(rng);
      if (c == 0) continue;
      t[i] = c;
      t[-i] = c;
    }
    if (!t.empty()) return t;
  }
}

}  // namespace

TEST_CASE("floor_mod uses the mathematical residue") {
  CHECK(floor_mod(-1, 10) == 9);
  CHECK(floor_mod(-10, 10) == 0);
  CHECK(floor_mod(-11, 10) == 9);
  CHECK(floor_mod(7, 3) == 1);
  CHECK(floor_mod(0, 1) == 0);
}

TEST_CASE("residue_sum examples") {
  const auto pw = oracle::powers(oracle::trinomial(), 5);
  for (long n = 0, p3 = 1; n <= 5; ++n, p3 *= 3) {
    CHECK(residue_sum(trinomial(), 1, 0, n) == p3);
    CHECK(oracle::residue_sum(pw[static_cast<std::size_t>(n)], 1, 0) == p3);
  }
  // (x^-1+1+x)^3 = x^-3+3x^-2+6x^-1+7+6x+3x^2+x^3; even exponents 3+7+3.
  CHECK(oracle::residue_sum(pw[3], 2, 0) == 13);
  CHECK(residue_sum(trinomial(), 2, 0, 3) == 13);
  // No exponent reaches +-10 before n = 5: the central coefficient.
  CHECK(oracle::coefficient(pw[4], 0) == 19);
  CHECK(residue_sum(trinomial(), 10, 0, 4) == 19);

  CHECK_THROWS_AS(residue_sum(trinomial(), 0, 0, 1), DomainError);
  CHECK_THROWS_AS(residue_sum(trinomial(), 3, 3, 1), DomainError);
  CHECK_THROWS_AS(residue_sum(trinomial(), 3, -1, 1), DomainError);
  CHECK_THROWS_AS(residue_sum(trinomial(), 3, 0, -1), DomainError);
}

TEST_CASE("transfer_matrix folds support wider than k") {
  // x^-2 + 5x^3 mod 2: c_{-2} lands on the diagonal, c_3 off it.
  const auto M = transfer_matrix(parse_laurent("x^-2+5*x^3"), 2);
  CHECK(M[0][0] == 1);
  CHECK(M[0][1] == 5);
  CHECK(M[1][0] == 5);
  CHECK(M[1][1] == 1);
  // x^-1 + 1 + x mod 1 collapses to a single entry P(1).
  CHECK(transfer_matrix(trinomial(), 1)[0][0] == 3);
}

TEST_CASE("ga: trinomial k = 1 and k = 2") {
  const auto one = ga(trinomial(), 1);
  CHECK(one.gfs[0] == rf_normalize(P({1}), P({1, -3})));
  check_solution_invariants(one);

  const auto two = ga(trinomial(), 2);
  CHECK(two.gfs[0] == rf_normalize(P({1, -1}), P({1, -2, -3})));
  CHECK(two.gfs[1] == rf_normalize(P({0, 2}), P({1, -2, -3})));
  CHECK(two.common_den == P({1, -2, -3}));
  CHECK(two.common_den == P({1, -3}) * P({1, 1}));
  check_solution_invariants(two);

  // Roots-of-unity filter: A(n,2,0) = (P(1)^n + P(-1)^n)/2 with P(1)=3, P(-1)=-1.
  const auto s = series(two.gfs[0], 20);
  const auto pw = oracle::powers(oracle::trinomial(), 20);
  mpz_class p3 = 1, m1 = 1;
  for (long n = 0; n <= 20; ++n, p3 *= 3, m1 = -m1) {
    CHECK(s[static_cast<std::size_t>(n)] == Rational(p3 + m1) / 2);
    CHECK(s[static_cast<std::size_t>(n)] == oracle::residue_sum(pw[static_cast<std::size_t>(n)], 2, 0));
  }
}

TEST_CASE("ga: 1+x, k = 2 has a degree-1 common denominator") {
  const auto sol = ga(parse_laurent("1+x"), 2);
  CHECK(sol.gfs[0] == rf_normalize(P({1, -1}), P({1, -2})));
  CHECK(sol.gfs[1] == rf_normalize(P({0, 1}), P({1, -2})));
  CHECK(sol.common_den.degree() == 1);
  CHECK_FALSE(sol.symmetric);
  check_solution_invariants(sol);
  // Even and odd binomial sums are 2^(n-1) for n >= 1.
  const auto even = series(sol.gfs[0], 10), odd = series(sol.gfs[1], 10);
  CHECK(even[0] == 1);
  CHECK(odd[0] == 0);
  for (long n = 1, half = 1; n <= 10; ++n, half *= 2) {
    CHECK(even[static_cast<std::size_t>(n)] == half);
    CHECK(odd[static_cast<std::size_t>(n)] == half);
  }
}

TEST_CASE("ga: errors") {
  CHECK_THROWS_AS(ga(LaurentPoly::zero(), 3), DomainError);
  CHECK_THROWS_AS(ga(trinomial(), 0), DomainError);
}

TEST_CASE("gas: trinomial k = 10 gives six distinct functions") {
  const auto sol = gas(trinomial(), 10);
  check_solution_invariants(sol);
  CHECK(sol.symmetric);
  std::set<std::string> distinct;
  for (const auto& f : sol.gfs) distinct.insert(f.to_string());
  CHECK(distinct.size() == 6);
  CHECK(sol == ga(trinomial(), 10));
}

TEST_CASE("gas: precondition and cross-path equality") {
  CHECK_THROWS_AS(gas(parse_laurent("1+x"), 2), DomainError);
  CHECK(gas(trinomial(), 2) == ga(trinomial(), 2));
}

TEST_CASE("recurrence_of") {
  const auto two = recurrence_of(ga(trinomial(), 2), 0);
  CHECK(two.rec_coeffs == Q({2, 3}));
  CHECK(two.initials == Q({1, 1}));
  const auto pw = oracle::powers(oracle::trinomial(), 30);
  const auto ext = extend(two, 30);
  for (long n = 0; n <= 30; ++n) CHECK(ext[static_cast<std::size_t>(n)] == oracle::residue_sum(pw[static_cast<std::size_t>(n)], 2, 0));

  const auto one = recurrence_of(ga(trinomial(), 1), 0);
  CHECK(one.rec_coeffs == Q({3}));
  CHECK(one.initials == Q({1}));

  // 1+x mod 2: 2^(n-1) only from n = 2 on, so the prefix is longer than the order.
  const auto binom = recurrence_of(ga(parse_laurent("1+x"), 2), 0);
  CHECK(binom.rec_coeffs == Q({2}));
  CHECK(binom.initials == Q({1, 1}));

  // x - 1 mod 1: det(I - tM) = 1, the sequence is 1, 0, 0, ...
  const auto nil = recurrence_of(ga(parse_laurent("x-1"), 1), 0);
  CHECK(nil.order() == 0);
  CHECK(extend(nil, 4) == Q({1, 0, 0, 0, 0}));

  CHECK_THROWS_AS(recurrence_of(ga(trinomial(), 2), 2), DomainError);
}

TEST_CASE("random Laurent polynomials: oracle equivalence and structure") {
  std::mt19937_64 rng(1990);
  for (int trial = 0; trial < 12; ++trial) {
    const auto terms = oracle::random_poly(rng, 5);
    const LaurentPoly Pl = to_laurent(terms);
    const auto pw = oracle::powers(terms, 36);
    for (long k = 1; k <= 12; ++k) {
      CAPTURE(Pl.to_string());
      CAPTURE(k);
      const auto sol = ga(Pl, k);
      check_solution_invariants(sol);

      // Series from the rational functions against direct expansion.
      for (long a = 0; a < k; ++a) {
        const auto s = series(sol.gfs[static_cast<std::size_t>(a)], 25);
        for (long n = 0; n <= 25; ++n)
          CHECK(s[static_cast<std::size_t>(n)] == oracle::residue_sum(pw[static_cast<std::size_t>(n)], k, a));
      }

      // The residue classes partition the total mass.
      RationalFunction total;
      for (const auto& f : sol.gfs) total = total + f;
      const Rational p1 = Pl.eval_at(1);
      CHECK(total == rf_normalize(P({1}), Poly({Rational(1), Rational(-p1)})));

      // Shared recurrence reproduces every class up to 3k.
      for (long a = 0; a < k; ++a) {
        const auto ext = extend(recurrence_of(sol, a), 3 * k);
        for (long n = 0; n <= 3 * k; ++n)
          CHECK(ext[static_cast<std::size_t>(n)] == oracle::residue_sum(pw[static_cast<std::size_t>(n)], k, a));
      }
    }
  }
}

TEST_CASE("Cramer degree bounds on the raw system") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly Pl = to_laurent(oracle::random_poly(rng, 6));
    for (long k = 1; k <= 9; ++k) {
      const auto M = transfer_matrix(Pl, k);
      PolyMatrix A(static_cast<std::size_t>(k), std::vector<Poly>(static_cast<std::size_t>(k)));
      for (long a = 0; a < k; ++a)
        for (long b = 0; b < k; ++b)
          A[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              Poly({Rational(a == b ? 1 : 0), Rational(-M[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])});
      std::vector<Poly> rhs(static_cast<std::size_t>(k));
      rhs[0] = P({1});
      const auto cs = solve_fraction_free(A, rhs, k);
      CHECK(cs.det.degree() <= k);
      for (const auto& num : cs.numerators) CHECK(num.degree() <= k - 1);
    }
  }
}

TEST_CASE("symmetric P: ga and gas agree") {
  std::mt19937_64 rng(75);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly Pl = to_laurent(random_symmetric(rng));
    REQUIRE(Pl.is_symmetric());
    for (long k = 1; k <= 12; ++k) {
      CAPTURE(Pl.to_string());
      CAPTURE(k);
      const auto s = gas(Pl, k);
      check_solution_invariants(s);
      CHECK(s == ga(Pl, k));
    }
  }
}

TEST_CASE("Pascal-analog shift identity") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const LaurentPoly Pl = to_laurent(oracle::random_poly(rng, 6));
    for (long k = 1; k <= 12; ++k) {
      std::vector<std::vector<Rational>> A;
      for (long n = 0; n <= 12; ++n) A.push_back(residue_sums(pow(Pl, n), k));
      for (long n = 1; n <= 12; ++n)
        for (long a = 0; a < k; ++a) {
          Rational rhs = 0;
          for (long i = Pl.min_exp(); i <= Pl.max_exp(); ++i)
            rhs += Pl.coeff(i) * A[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(floor_mod(a - i, k))];
          CHECK(A[static_cast<std::size_t>(n)][static_cast<std::size_t>(a)] == rhs);
        }
    }
  }
}
