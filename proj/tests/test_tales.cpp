#include <doctest.h>

#include "gea/error.hpp"
#include "gea/tales.hpp"
#include "test_helpers.hpp"

using namespace gea;
using testing_support::to_laurent;

namespace {

// True residue sums A(0..horizon, k, a) by direct expansion.
std::vector<Rational> oracle_terms(const oracle::Terms& p, long k, long a, long horizon) {
  std::vector<Rational> out;
  for (const auto& pw : oracle::powers(p, horizon)) out.push_back(oracle::residue_sum(pw, k, a));
  return out;
}

void check_tale_against_oracle(const Tale& t, const oracle::Terms& p) {
  REQUIRE(t.k);
  REQUIRE(t.a);
  const auto truth = oracle_terms(p, *t.k, *t.a, t.horizon);
  const auto cand = extend(t.candidate, t.horizon);
  CHECK(t.first_failure_n == t.index_offset + t.prefix_len);
  CHECK(t.prefix_len >= t.fit_window + kTaleMargin);
  for (long n = 0; n < t.prefix_len; ++n) CHECK(cand[static_cast<std::size_t>(n)] == truth[static_cast<std::size_t>(n)]);
  CHECK(cand[static_cast<std::size_t>(t.prefix_len)] == t.expected);
  CHECK(truth[static_cast<std::size_t>(t.prefix_len)] == t.actual);
  CHECK(t.expected != t.actual);
  CHECK(t.candidate.order() <= t.fit_window / 2 - 1);
}

}  // namespace

TEST_CASE("euler_tale") {
  const Tale t = euler_tale();
  CHECK(t.index_offset == -1);
  CHECK(t.prefix_len == 9);
  CHECK(t.first_failure_n == 8);
  CHECK(t.first_failure_n == t.index_offset + t.prefix_len);
  CHECK_FALSE(t.k);
  CHECK_FALSE(t.a);

  // L(8) = 3 (9 choose 0)_2 - (10 choose 0)_2 and R(8) = F_8 (F_8 + 1).
  const auto pw = oracle::powers(oracle::trinomial(), 10);
  const Rational L8 = 3 * oracle::coefficient(pw[9], 0) - oracle::coefficient(pw[10], 0);
  const mpz_class F8 = oracle::fib(8);
  CHECK(L8 == 464);
  CHECK(F8 * (F8 + 1) == 462);
  CHECK(t.actual == L8);
  CHECK(t.expected == Rational(F8 * (F8 + 1)));

  // The candidate reproduces F_n (F_n + 1) and the agreement prefix.
  const auto cand = extend(t.candidate, 20);
  for (long n = -1; n <= 19; ++n) {
    const mpz_class f = oracle::fib(n);
    CHECK(cand[static_cast<std::size_t>(n + 1)] == Rational(f * (f + 1)));
  }
  for (long n = -1; n <= 7; ++n) {
    const auto m = static_cast<std::size_t>(n + 1);
    CHECK(t.true_terms[m] == t.candidate_terms[m]);
  }
}

TEST_CASE("george_check") {
  const GeorgeReport r = george_check();
  CHECK(r.rewriting_holds);
  CHECK(r.first_n_with_outer_summand == 8);
  CHECK(r.only_central_summands_below_8);
  CHECK(r.euler_window_holds);
  CHECK(r.rigorous.equal);
  CHECK(r.rigorous.equal == r.euler_window_holds);
  CHECK(r.oracle_holds);
  CHECK(r.all_hold());
  CHECK(r.left_recurrence.order() <= 10);
  CHECK(r.right_recurrence.order() <= 6);

  // n = 8: the j = -1 term (9 choose -9)_2 = 1 turns 232 into 231.
  const auto pw = oracle::powers(oracle::trinomial(), 9);
  CHECK(oracle::coefficient(pw[9], 0) - oracle::coefficient(pw[9], 1) == 232);
  CHECK(oracle::coefficient(pw[9], -9) == 1);
  const Rational left8 = oracle::residue_sum(pw[9], 10, 0) - oracle::residue_sum(pw[9], 10, 1);
  CHECK(left8 == 231);
  CHECK(r.left_side[8] == left8);
  CHECK(r.right_side[8] == Rational(oracle::fib(8) * (oracle::fib(8) + 1)) / 2);

  // n = 3: F_3 = 2, so the right side is 3.
  CHECK(oracle::fib(3) == 2);
  CHECK(r.left_side[3] == oracle::residue_sum(pw[4], 10, 0) - oracle::residue_sum(pw[4], 10, 1));
  CHECK(r.left_side[3] == 3);

  // Rewriting at n = 0: (2 choose 0)_2 = 3 = 1 + 1 + 1.
  CHECK(oracle::coefficient(pw[2], 0) == 3);
  CHECK(oracle::coefficient(pw[1], -1) + oracle::coefficient(pw[1], 0) + oracle::coefficient(pw[1], 1) == 3);
}

TEST_CASE("george_check honors a custom window") {
  GeorgeOptions opts;
  opts.euler_window = 25;
  opts.oracle_horizon = 40;
  const auto r = george_check(opts);
  CHECK(r.left_side.size() == 26);
  CHECK(r.oracle_horizon == 40);
  CHECK(r.all_hold());
}

TEST_CASE("find_tale: trinomial mod 10, class 0") {
  const auto s = find_tale(trinomial(), 10, 0, 8, 40);
  // Ground truth for the outcome: fit the oracle's first 8 terms directly.
  const auto truth = oracle_terms(oracle::trinomial(), 10, 0, 40);
  const auto fit = fit_recurrence(std::vector<Rational>(truth.begin(), truth.begin() + 8), 3);
  if (!fit) {
    CHECK(s.outcome == TaleOutcome::no_candidate);
    CHECK_FALSE(s.tale);
  } else {
    REQUIRE(s.tale);
    check_tale_against_oracle(*s.tale, oracle::trinomial());
    CHECK(s.tale->first_failure_n < 20);
  }
}

TEST_CASE("find_tale: a provable law is a theorem, not a tale") {
  const auto s = find_tale(trinomial(), 1, 0, 8, 40);
  CHECK(s.outcome == TaleOutcome::theorem);
  CHECK_FALSE(s.tale);
}

TEST_CASE("find_tale: preconditions") {
  CHECK_THROWS_AS(find_tale(trinomial(), 10, 0, 8, 8), DomainError);
  CHECK_THROWS_AS(find_tale(trinomial(), 10, 0, 3, 20), DomainError);
  CHECK_THROWS_AS(find_tale(trinomial(), 10, 10, 8, 20), DomainError);
}

TEST_CASE("find_tale: every tale in a sweep checks out against expansion") {
  const std::vector<std::string> polys = {"x^-1+1+x", "x^-1+x", "1+x+x^2", "x^-2+1+x^2", "1+x^3"};
  int tales = 0;
  for (const auto& text : polys) {
    const LaurentPoly P = parse_laurent(text);
    const auto terms = testing_support::to_terms(P);
    for (long k = 2; k <= 12; ++k)
      for (long a = 0; a < k; ++a) {
        const auto s = find_tale(P, k, a, 12, 60);
        CAPTURE(text);
        CAPTURE(k);
        CAPTURE(a);
        CHECK(s.tale.has_value() == (s.outcome == TaleOutcome::tale));
        if (s.tale) {
          ++tales;
          check_tale_against_oracle(*s.tale, terms);
        }
      }
  }
  CHECK(tales > 0);
}
