#include "gea/laurent.hpp"

#include "gea/error.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace gea {

LaurentPoly::LaurentPoly(long min_exp, std::vector<Rational> coeffs)
    : min_exp_(min_exp), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
  return LaurentPoly(exponent, {c});
}

void LaurentPoly::canonicalize() {
  for (auto& c : coeffs_) c.canonicalize();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    min_exp_ = 0;
    return;
  }
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  min_exp_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
}

Rational LaurentPoly::coeff(long j) const {
  if (is_zero() || j < min_exp_ || j > max_exp()) return 0;
  return coeffs_[static_cast<std::size_t>(j - min_exp_)];
}

bool LaurentPoly::is_symmetric() const {
  if (is_zero()) return true;
  if (min_exp_ != -max_exp()) return false;
  return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

Rational LaurentPoly::eval_at(const Rational& v) const {
  if (is_zero()) return 0;
  if (v == 0) {
    if (min_exp_ < 0) throw DomainError("eval_at: cannot evaluate a negative power of x at 0");
    return coeff(0);
  }
  // Horner over the dense coefficients, then scale by v^min_exp.
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  Rational base = min_exp_ < 0 ? Rational(1) / v : v;
  unsigned long e = static_cast<unsigned long>(min_exp_ < 0 ? -min_exp_ : min_exp_);
  Rational scale;
  mpz_pow_ui(scale.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(scale.get_den_mpz_t(), base.get_den_mpz_t(), e);
  scale.canonicalize();
  return acc * scale;
}

namespace {

void append_term(std::string& out, const Rational& c, long e, const char* var) {
  bool negative = c < 0;
  Rational mag = negative ? Rational(-c) : c;
  if (negative)
    out += '-';
  else if (!out.empty())
    out += '+';
  if (e == 0) {
    out += to_string(mag);
    return;
  }
  if (mag != 1) {
    out += to_string(mag);
    out += '*';
  }
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) append_term(out, coeffs_[i], min_exp_ + static_cast<long>(i), "x");
  return out;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero()) return q;
  if (q.is_zero()) return p;
  long lo = std::min(p.min_exp(), q.min_exp());
  long hi = std::max(p.max_exp(), q.max_exp());
  std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
  for (long j = lo; j <= hi; ++j) c[static_cast<std::size_t>(j - lo)] = p.coeff(j) + q.coeff(j);
  return LaurentPoly(lo, std::move(c));
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Rational> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return LaurentPoly(p.min_exp() + q.min_exp(), std::move(c));
}

LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly pow(const LaurentPoly& p, long n) {
  if (n < 0) throw DomainError("pow: negative exponent " + std::to_string(n));
  LaurentPoly result = LaurentPoly::one();
  for (long i = 0; i < n; ++i) result = result * p;
  return result;
}

std::vector<LaurentPoly> powers(const LaurentPoly& p, long n_max) {
  if (n_max < 0) throw DomainError("powers: negative exponent " + std::to_string(n_max));
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(n_max) + 1);
  out.push_back(LaurentPoly::one());
  for (long i = 1; i <= n_max; ++i) out.push_back(out.back() * p);
  return out;
}

LaurentPoly trinomial() { return LaurentPoly(-1, {1, 1, 1}); }

namespace {

class LaurentParser {
public:
  explicit LaurentParser(std::string_view text) : text_(text) {}

  LaurentPoly parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    term(sign);
    for (;;) {
      skip_ws();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail(std::string("expected '+' or '-' but found '") + c + "'");
      ++pos_;
      term(c == '-' ? -1 : 1);
    }
    if (terms_.empty()) return {};
    long lo = terms_.begin()->first;
    long hi = terms_.rbegin()->first;
    std::vector<Rational> c(static_cast<std::size_t>(hi - lo + 1));
    for (auto& [e, v] : terms_) c[static_cast<std::size_t>(e - lo)] = v;
    return LaurentPoly(lo, std::move(c));
  }

private:
  void term(int sign) {
    skip_ws();
    if (at_end()) fail("expected a term");
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = coefficient();
      have_coeff = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        skip_ws();
        if (at_end() || peek() != 'x') fail("expected 'x' after '*'");
      }
    }
    long exponent = 0;
    if (!at_end() && peek() == 'x') {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exponent = exponent_value();
      }
    } else if (!have_coeff) {
      fail(std::string("unexpected character '") + (at_end() ? '?' : peek()) + "'");
    }
    terms_[exponent] += sign * coeff;
    if (terms_[exponent] == 0) terms_.erase(exponent);
  }

  Rational coefficient() {
    Integer num = digits();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t den_pos = pos_;
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a positive integer denominator");
      Integer den = digits();
      if (den == 0) throw ParseError("division by zero in coefficient", den_pos);
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  long exponent_value() {
    skip_ws();
    int sign = 1;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_ws();
    }
    std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer exponent");
    Integer e = digits();
    if (!at_end() && (peek() == '.' || peek() == '/'))
      throw ParseError("non-integer exponent", start);
    if (!e.fits_slong_p()) throw ParseError("exponent out of range", start);
    return sign * e.get_si();
  }

  Integer digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError("syntax error: " + msg, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<long, Rational> terms_;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) { return LaurentParser(text).parse(); }

}  // namespace gea
