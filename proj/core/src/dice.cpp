#include "gea/dice.hpp"

#include "gea/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>

namespace gea {

DieSpec::DieSpec(std::vector<DieFace> faces) {
  if (faces.empty()) throw DomainError("die must have at least one face");
  std::map<long, Rational> merged;
  Rational total = 0;
  for (auto& f : faces) {
    if (f.prob <= 0)
      throw DomainError("die face " + std::to_string(f.value) + " has non-positive probability " + to_string(f.prob));
    merged[f.value] += f.prob;
    total += f.prob;
  }
  if (total != 1) throw DomainError("die probabilities sum to " + to_string(total) + ", not 1");
  for (auto& [v, p] : merged) faces_.push_back({v, p});
}

long DieSpec::max_abs_value() const noexcept {
  long m = 0;
  for (const auto& f : faces_) m = std::max(m, std::labs(f.value));
  return m;
}

LaurentPoly die_poly(const DieSpec& die) {
  const auto& faces = die.faces();
  const long lo = faces.front().value;
  std::vector<Rational> c(static_cast<std::size_t>(faces.back().value - lo + 1));
  for (const auto& f : faces) c[static_cast<std::size_t>(f.value - lo)] = f.prob;
  return LaurentPoly(lo, std::move(c));
}

GASolution modular_prob_gf(const DieSpec& die, long k, long max_k) {
  if (k < 1) throw DomainError("k must be a positive integer");
  if (k > max_k)
    throw DomainError("k = " + std::to_string(k) + " exceeds the configured ceiling " + std::to_string(max_k));
  return ga(die_poly(die), k);
}

std::vector<Rational> modular_probs(const GASolution& sol, long n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  std::vector<Rational> out;
  out.reserve(sol.gfs.size());
  for (const auto& f : sol.gfs) out.push_back(series(f, n).back());
  return out;
}

Rational break_even_prob(const DieSpec& die, long n) {
  if (n < 0) throw DomainError("n must be nonnegative");
  return pow(die_poly(die), n).coeff(0);
}

}  // namespace gea
