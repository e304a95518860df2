#include "gea/tales.hpp"

#include "gea/error.hpp"

#include <algorithm>
#include <string>

namespace gea {

const char* to_string(TaleOutcome o) noexcept {
  switch (o) {
    case TaleOutcome::tale: return "tale";
    case TaleOutcome::theorem: return "theorem";
    case TaleOutcome::no_candidate: return "no_candidate";
    case TaleOutcome::failed_too_early: return "failed_too_early";
    case TaleOutcome::survived_horizon: return "survived_horizon";
  }
  return "unknown";
}

namespace {

std::vector<Rational> head(const std::vector<Rational>& v, long count) {
  return {v.begin(), v.begin() + std::min<long>(count, static_cast<long>(v.size()))};
}

long first_mismatch(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != y[i]) return static_cast<long>(i);
  return static_cast<long>(n);
}

// F_n (F_n + 1) for n = first ... last.
std::vector<Rational> fib_products(long first, long last) {
  std::vector<Rational> out;
  for (long n = first; n <= last; ++n) {
    Integer f = fibonacci(n);
    out.emplace_back(f * (f + 1));
  }
  return out;
}

}  // namespace

TaleSearch find_tale(const LaurentPoly& P, long k, long a, long fit_window, long horizon) {
  if (fit_window < 4) throw DomainError("fit_window must be at least 4");
  if (horizon <= fit_window) throw DomainError("horizon must exceed fit_window");
  if (k < 1 || a < 0 || a >= k) throw DomainError("need k >= 1 and 0 <= a < k");

  const GASolution sol = P.is_symmetric() ? gas(P, k) : ga(P, k);
  const auto truth = series(sol.gfs[static_cast<std::size_t>(a)], horizon);
  const long max_order = fit_window / 2 - 1;
  const std::vector<Rational> window(truth.begin(), truth.begin() + fit_window);

  TaleSearch out;
  auto candidate = fit_recurrence(window, max_order);
  if (!candidate) {
    out.outcome = TaleOutcome::no_candidate;
    out.note = "no constant-coefficient recurrence of order <= " + std::to_string(max_order) +
               " fits the first " + std::to_string(fit_window) + " terms";
    return out;
  }

  const auto predicted = extend(*candidate, horizon);
  const long prefix = first_mismatch(truth, predicted);
  if (prefix > horizon) {
    const auto verdict = verify_equal(*candidate, recurrence_of(sol, a));
    if (verdict.equal) {
      out.outcome = TaleOutcome::theorem;
      out.note = "not a tale, a theorem: candidate proven equal over a window of " +
                 std::to_string(verdict.window) + " terms";
    } else {
      out.outcome = TaleOutcome::survived_horizon;
      out.note = "candidate agrees up to the horizon but differs at n = " + std::to_string(verdict.n);
    }
    return out;
  }
  if (prefix < fit_window + kTaleMargin) {
    out.outcome = TaleOutcome::failed_too_early;
    out.note = "candidate fails at n = " + std::to_string(prefix) + ", within " +
               std::to_string(kTaleMargin) + " terms of the fitting window";
    return out;
  }

  Tale t;
  t.P = P;
  t.k = k;
  t.a = a;
  t.candidate = std::move(*candidate);
  t.prefix_len = prefix;
  t.first_failure_n = prefix;
  t.expected = predicted[static_cast<std::size_t>(prefix)];
  t.actual = truth[static_cast<std::size_t>(prefix)];
  t.label = "A(n," + std::to_string(k) + "," + std::to_string(a) + ") for P = " + P.to_string() +
            ": order-" + std::to_string(t.candidate.order()) + " law fitted to " +
            std::to_string(fit_window) + " terms holds for n < " + std::to_string(prefix) +
            " (search: minimal fit, window " + std::to_string(fit_window) + ", horizon " +
            std::to_string(horizon) + ")";
  t.fit_window = fit_window;
  t.horizon = horizon;
  t.true_terms = head(truth, kTalePreviewTerms);
  t.candidate_terms = head(predicted, kTalePreviewTerms);
  out.outcome = TaleOutcome::tale;
  out.tale = std::move(t);
  out.note = "candidate survives " + std::to_string(prefix - fit_window) + " terms past its fitting window";
  return out;
}

Tale euler_tale() {
  // Index m = n + 1 runs from 0, so n runs from -1.
  constexpr long kOffset = -1;
  constexpr long kLastN = 20;
  const LaurentPoly P = trinomial();
  const auto pw = powers(P, kLastN + 2);

  std::vector<Rational> left;
  for (long n = kOffset; n <= kLastN; ++n) {
    const auto m = static_cast<std::size_t>(n + 1);
    left.push_back(3 * pw[m].coeff(0) - pw[m + 1].coeff(0));
  }
  const auto right = fib_products(kOffset, kLastN);

  // F_n (F_n + 1) is C-finite of order 5; fit it as the candidate law.
  auto candidate = fit_recurrence(fib_products(kOffset, kOffset + 29), 6);
  if (!candidate) throw InternalError("euler_tale: F_n(F_n+1) did not fit a recurrence of order <= 6");
  const auto predicted = extend(*candidate, static_cast<long>(right.size()) - 1);
  if (predicted != right) throw InternalError("euler_tale: fitted candidate does not reproduce F_n(F_n+1)");

  Tale t;
  t.P = P;
  t.candidate = std::move(*candidate);
  t.index_offset = kOffset;
  t.prefix_len = first_mismatch(left, right);
  t.first_failure_n = kOffset + t.prefix_len;
  if (t.prefix_len != 9 || t.first_failure_n != 8)
    throw InternalError("euler_tale: expected agreement on -1 <= n <= 7 and failure at n = 8");
  t.expected = right[static_cast<std::size_t>(t.prefix_len)];
  t.actual = left[static_cast<std::size_t>(t.prefix_len)];
  t.label = "3 (n+1 choose 0)_2 - (n+2 choose 0)_2 = F_n (F_n + 1): holds for the nine values "
            "-1 <= n <= 7, fails at n = 8";
  t.horizon = kLastN;
  t.true_terms = head(left, kTalePreviewTerms);
  t.candidate_terms = head(right, kTalePreviewTerms);
  return t;
}

GeorgeReport george_check(const GeorgeOptions& options) {
  constexpr long kModulus = 10;
  GeorgeReport rep;
  const LaurentPoly P = trinomial();
  const long top = std::max({options.rewrite_horizon + 2, options.oracle_horizon + 1, 10L});
  const auto pw = powers(P, top);

  // (i) rewriting step and equivalence of the two central-coefficient forms.
  rep.rewrite_horizon = options.rewrite_horizon;
  rep.rewriting_holds = true;
  for (long n = 0; n <= options.rewrite_horizon; ++n) {
    const auto& p1 = pw[static_cast<std::size_t>(n + 1)];
    const auto& p2 = pw[static_cast<std::size_t>(n + 2)];
    const bool split = p2.coeff(0) == p1.coeff(-1) + p1.coeff(0) + p1.coeff(1);
    const bool forms = 3 * p1.coeff(0) - p2.coeff(0) == 2 * (p1.coeff(0) - p1.coeff(1));
    if (!split || !forms) {
      rep.rewriting_holds = false;
      break;
    }
  }

  // (ii) for which n do summands with j != 0 appear?
  for (long n = 0; n + 1 <= top; ++n) {
    const auto& p = pw[static_cast<std::size_t>(n + 1)];
    bool outer = false;
    for (long e = p.min_exp(); e <= p.max_exp() && !outer; ++e) {
      const long r = floor_mod(e, kModulus);
      const bool counted = r == 0 || r == 1;
      const bool central = e == 0 || e == 1;
      outer = counted && !central && p.coeff(e) != 0;
    }
    if (outer) {
      rep.first_n_with_outer_summand = n;
      break;
    }
  }
  rep.only_central_summands_below_8 = rep.first_n_with_outer_summand >= 8;

  // (iii) the identity itself, from the generating functions.
  const GASolution sol = gas(P, kModulus);
  const auto lhs = [&](long last) {
    const auto s0 = series(sol.gfs[0], last + 1);
    const auto s1 = series(sol.gfs[1], last + 1);
    std::vector<Rational> out;
    for (long n = 0; n <= last; ++n) out.push_back(s0[static_cast<std::size_t>(n + 1)] - s1[static_cast<std::size_t>(n + 1)]);
    return out;
  };
  const auto half_fib = [](long last) {
    auto v = fib_products(0, last);
    for (auto& x : v) x /= 2;
    return v;
  };

  rep.euler_window = options.euler_window;
  rep.left_side = lhs(options.euler_window);
  rep.right_side = half_fib(options.euler_window);
  rep.euler_window_holds = rep.left_side == rep.right_side;

  const auto rec0 = recurrence_of(sol, 0);
  const auto rec1 = recurrence_of(sol, 1);
  const long r = rec0.order();
  // The difference obeys the shared recurrence from max(start) on; shifting
  // by one moves that down by one, but never below the order.
  const long start = std::max(std::max(rec0.start(), rec1.start()) - 1, r);
  rep.left_recurrence.rec_coeffs = rec0.rec_coeffs;
  if (start > 0) rep.left_recurrence.initials = lhs(start - 1);

  auto right = fit_recurrence(half_fib(39), 6);
  if (!right) throw InternalError("george_check: F_n(F_n+1)/2 did not fit a recurrence of order <= 6");
  rep.right_recurrence = std::move(*right);
  rep.rigorous = verify_equal(rep.left_recurrence, rep.right_recurrence);

  rep.oracle_horizon = options.oracle_horizon;
  const auto rhs = half_fib(options.oracle_horizon);
  rep.oracle_holds = true;
  for (long n = 0; n <= options.oracle_horizon; ++n) {
    const auto sums = residue_sums(pw[static_cast<std::size_t>(n + 1)], kModulus);
    if (sums[0] - sums[1] != rhs[static_cast<std::size_t>(n)]) {
      rep.oracle_holds = false;
      rep.oracle_first_mismatch = n;
      break;
    }
  }
  return rep;
}

}  // namespace gea
