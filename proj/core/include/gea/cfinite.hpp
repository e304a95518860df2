#pragma once

#include "gea/rational.hpp"

#include <optional>
#include <vector>

namespace gea {

/// Constant-coefficient recurrence s(n) = d_1 s(n-1) + ... + d_r s(n-r),
/// holding for every n >= initials.size().
///
/// initials.size() may exceed the order: a sequence whose generating
/// function has numerator degree >= denominator degree only obeys its
/// recurrence after a short irregular prefix, and that prefix is carried in
/// initials. Order 0 is allowed and means s(n) = 0 past the initials.
struct LinearRecurrence {
  std::vector<Rational> rec_coeffs;  // d_1 ... d_r, d_r != 0
  std::vector<Rational> initials;    // s(0) ... s(m-1), m >= r

  long order() const noexcept { return static_cast<long>(rec_coeffs.size()); }
  /// First index produced by the recurrence rather than read from initials.
  long start() const noexcept { return static_cast<long>(initials.size()); }

  /// Throws DomainError if d_r == 0 or fewer initials than the order.
  void validate() const;

  friend bool operator==(const LinearRecurrence&, const LinearRecurrence&) = default;
};

/// F_n with F_{-1} = 1, F_0 = 0. Defined for n >= -1.
Integer fibonacci(long n);

/// s(0) ... s(N).
std::vector<Rational> extend(const LinearRecurrence& rec, long N);

/// Smallest look-back window w <= max_order such that
/// s(n) = sum_{j=1..w} d_j s(n-j) holds for every supplied n >= w, found by
/// exact elimination on the Hankel-structured system. Trailing zero d's are
/// trimmed, so the returned order can be below w with w initials.
///
/// Requires terms.size() >= 2 * max_order + 2 (DomainError otherwise);
/// returns nullopt when no window up to max_order fits.
std::optional<LinearRecurrence> fit_recurrence(const std::vector<Rational>& terms, long max_order);

struct EqualityVerdict {
  bool equal = false;
  long window = 0;  // number of terms compared, n = 0 ... window-1
  // Set on a difference: first index and both values there.
  long n = -1;
  Rational a_value;
  Rational b_value;
};

/// Terms needed to prove two recurrences define the same sequence: past
/// max(a.start + b.order, b.start + a.order) the difference is annihilated
/// by the product of both shift operators, which has order a.order + b.order.
long proof_window(const LinearRecurrence& a, const LinearRecurrence& b);

/// Compares max(proof_window(a, b), min_window) leading terms. Agreement is a
/// proof of equality for all n.
EqualityVerdict verify_equal(const LinearRecurrence& a, const LinearRecurrence& b, long min_window = 0);

/// terms[last] / terms[last - 1]. DomainError if the next-to-last term is 0.
Rational growth_rate_estimate(const std::vector<Rational>& terms);

}  // namespace gea
