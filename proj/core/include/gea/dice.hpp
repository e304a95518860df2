#pragma once

#include "gea/gasolver.hpp"
#include "gea/laurent.hpp"

#include <vector>

namespace gea {

struct DieFace {
  long value = 0;
  Rational prob;

  friend bool operator==(const DieFace&, const DieFace&) = default;
};

/// A loaded die with signed integer payoffs. Faces are kept sorted by value
/// with duplicates merged; every probability is positive and they sum to 1.
class DieSpec {
public:
  /// Throws DomainError when a probability is not positive or the total is not 1.
  explicit DieSpec(std::vector<DieFace> faces);

  const std::vector<DieFace>& faces() const noexcept { return faces_; }
  long max_abs_value() const noexcept;

  friend bool operator==(const DieSpec&, const DieSpec&) = default;

private:
  std::vector<DieFace> faces_;
};

/// sum_i p_i x^{v_i}; evaluates to 1 at x = 1.
LaurentPoly die_poly(const DieSpec& die);

/// Default ceiling on k for the generating-function path. Elimination costs
/// grow like k^3 times polynomial arithmetic of degree k.
inline constexpr long kDefaultMaxModulus = 2000;

/// ga(die_poly(die), k): series(gfs[a], n)[n] is the probability that the
/// running total is congruent to a mod k after n throws.
GASolution modular_prob_gf(const DieSpec& die, long k, long max_k = kDefaultMaxModulus);

/// b_{k,a}(n) for every a at once, read off the generating functions.
std::vector<Rational> modular_probs(const GASolution& sol, long n);

/// Probability that the running total is exactly 0 after n throws.
Rational break_even_prob(const DieSpec& die, long n);

}  // namespace gea
