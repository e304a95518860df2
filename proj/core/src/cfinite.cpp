#include "gea/cfinite.hpp"

#include "gea/error.hpp"

#include <algorithm>
#include <string>

namespace gea {

void LinearRecurrence::validate() const {
  if (!rec_coeffs.empty() && rec_coeffs.back() == 0)
    throw DomainError("linear recurrence: last coefficient d_r must be nonzero");
  if (initials.size() < rec_coeffs.size())
    throw DomainError("linear recurrence: need at least " + std::to_string(order()) + " initial values");
}

Integer fibonacci(long n) {
  if (n < -1) throw DomainError("fibonacci: index must be >= -1, got " + std::to_string(n));
  if (n == -1) return 1;
  Integer out;
  mpz_fib_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

std::vector<Rational> extend(const LinearRecurrence& rec, long N) {
  if (N < 0) return {};
  const auto count = static_cast<std::size_t>(N) + 1;
  std::vector<Rational> s(rec.initials.begin(),
                          rec.initials.begin() + static_cast<long>(std::min(count, rec.initials.size())));
  const auto& d = rec.rec_coeffs;
  while (s.size() < count) {
    const std::size_t n = s.size();
    Rational acc = 0;
    for (std::size_t j = 1; j <= d.size(); ++j)
      if (d[j - 1] != 0) acc += d[j - 1] * s[n - j];
    s.push_back(std::move(acc));
  }
  return s;
}

namespace {

// Solves the (possibly overdetermined) system rows * d = rhs exactly.
// Free variables are set to zero. nullopt if inconsistent.
std::optional<std::vector<Rational>> solve_consistent(std::vector<std::vector<Rational>> rows,
                                                      std::vector<Rational> rhs, std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns && r < m; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / rows[r][c];
    for (std::size_t j = c; j < unknowns; ++j) rows[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j < unknowns; ++j) rows[i][j] -= f * rows[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < r; ++i) x[pivot_cols[i]] = rhs[i];
  return x;
}

}  // namespace

std::optional<LinearRecurrence> fit_recurrence(const std::vector<Rational>& terms, long max_order) {
  if (max_order < 1) throw DomainError("fit_recurrence: max_order must be positive");
  const auto needed = static_cast<std::size_t>(2 * max_order + 2);
  if (terms.size() < needed)
    throw DomainError("fit_recurrence: insufficient data, need " + std::to_string(needed) +
                      " terms, got " + std::to_string(terms.size()));

  for (std::size_t w = 1; w <= static_cast<std::size_t>(max_order); ++w) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t n = w; n < terms.size(); ++n) {
      std::vector<Rational> row(w);
      for (std::size_t j = 1; j <= w; ++j) row[j - 1] = terms[n - j];
      rows.push_back(std::move(row));
      rhs.push_back(terms[n]);
    }
    auto d = solve_consistent(std::move(rows), std::move(rhs), w);
    if (!d) continue;
    while (!d->empty() && d->back() == 0) d->pop_back();
    return LinearRecurrence{std::move(*d), std::vector<Rational>(terms.begin(), terms.begin() + static_cast<long>(w))};
  }
  return std::nullopt;
}

long proof_window(const LinearRecurrence& a, const LinearRecurrence& b) {
  return std::max(a.start() + b.order(), b.start() + a.order());
}

EqualityVerdict verify_equal(const LinearRecurrence& a, const LinearRecurrence& b, long min_window) {
  EqualityVerdict v;
  v.window = std::max(proof_window(a, b), min_window);
  if (v.window == 0) {
    v.equal = true;
    return v;
  }
  const auto sa = extend(a, v.window - 1);
  const auto sb = extend(b, v.window - 1);
  for (std::size_t n = 0; n < sa.size(); ++n) {
    if (sa[n] != sb[n]) {
      v.n = static_cast<long>(n);
      v.a_value = sa[n];
      v.b_value = sb[n];
      return v;
    }
  }
  v.equal = true;
  return v;
}

Rational growth_rate_estimate(const std::vector<Rational>& terms) {
  if (terms.size() < 2) throw DomainError("growth_rate_estimate: need at least two terms");
  const Rational& prev = terms[terms.size() - 2];
  if (prev == 0) throw DomainError("growth_rate_estimate: next-to-last term is zero");
  return terms.back() / prev;
}

}  // namespace gea
