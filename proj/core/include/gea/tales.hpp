#pragma once

#include "gea/cfinite.hpp"
#include "gea/gasolver.hpp"
#include "gea/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gea {

/// A misleading induction: a constant-coefficient candidate that matches the
/// true sequence on its first prefix_len terms and then fails.
///
/// Terms are indexed from index_offset, so the failure sits at
/// first_failure_n = index_offset + prefix_len. k and a are empty when the
/// true sequence is not a residue-class sum (Euler's central-coefficient
/// combination).
struct Tale {
  LaurentPoly P;
  std::optional<long> k;
  std::optional<long> a;
  LinearRecurrence candidate;
  long prefix_len = 0;
  long first_failure_n = 0;
  Rational expected;  // candidate value at the failure
  Rational actual;    // true value at the failure
  std::string label;
  long index_offset = 0;
  long fit_window = 0;  // 0: candidate was not fitted from a window
  long horizon = 0;
  std::vector<Rational> true_terms;       // first few, for inspection
  std::vector<Rational> candidate_terms;
};

enum class TaleOutcome {
  tale,               // fails after surviving past the fitting window
  theorem,            // candidate proven equal to the true sequence
  no_candidate,       // nothing of order <= fit_window/2 - 1 fits
  failed_too_early,   // fails within two terms of the fitting window
  survived_horizon,   // no failure up to horizon, yet not provably equal
};

const char* to_string(TaleOutcome o) noexcept;

struct TaleSearch {
  TaleOutcome outcome = TaleOutcome::no_candidate;
  std::optional<Tale> tale;
  std::string note;
};

/// Minimum number of matched terms past the fitting window for a tale.
inline constexpr long kTaleMargin = 2;
/// Number of leading terms echoed in Tale::true_terms/candidate_terms.
inline constexpr long kTalePreviewTerms = 12;

/// Fits the minimal candidate of order <= fit_window/2 - 1 to the first
/// fit_window terms of A(n,k,a), then scans n <= horizon for a failure.
/// Requires fit_window >= 4 and horizon > fit_window.
TaleSearch find_tale(const LaurentPoly& P, long k, long a, long fit_window, long horizon);

/// 3 (n+1 choose 0)_2 - (n+2 choose 0)_2 against F_n (F_n + 1): agreement for
/// -1 <= n <= 7, failure at n = 8. Throws InternalError if the arithmetic
/// disagrees with that story.
Tale euler_tale();

struct GeorgeOptions {
  long euler_window = 20;     // checked directly, n = 0 ... euler_window
  long oracle_horizon = 200;  // brute-force expansion, n = 0 ... oracle_horizon
  long rewrite_horizon = 30;
};

/// Verification of
///   sum_j (n+1 choose 10j)_2 - sum_j (n+1 choose 10j+1)_2 = F_n (F_n + 1) / 2.
struct GeorgeReport {
  // (n+2 choose 0) = (n+1 choose -1) + (n+1 choose 0) + (n+1 choose 1), and the
  // two forms of the central-coefficient identity agree, for n <= rewrite_horizon.
  bool rewriting_holds = false;
  long rewrite_horizon = 0;

  // First n at which a j != 0 summand contributes; expected to be 8.
  long first_n_with_outer_summand = -1;
  bool only_central_summands_below_8 = false;

  // A(n+1,10,0) - A(n+1,10,1) from the generating functions vs F_n(F_n+1)/2.
  long euler_window = 0;
  std::vector<Rational> left_side;
  std::vector<Rational> right_side;
  bool euler_window_holds = false;

  LinearRecurrence left_recurrence;
  LinearRecurrence right_recurrence;
  EqualityVerdict rigorous;

  long oracle_horizon = 0;
  bool oracle_holds = false;
  long oracle_first_mismatch = -1;

  bool all_hold() const noexcept {
    return rewriting_holds && only_central_summands_below_8 && euler_window_holds && rigorous.equal &&
           oracle_holds;
  }
};

GeorgeReport george_check(const GeorgeOptions& options = {});

}  // namespace gea
