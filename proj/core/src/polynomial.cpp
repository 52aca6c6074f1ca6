#include "fpb/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fpb {

namespace {

using Coefficient = LaurentPolynomial::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("LaurentPolynomial: coefficient overflow");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("LaurentPolynomial: coefficient overflow");
  return r;
}

Coefficient parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Coefficient v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("LaurentPolynomial: bad integer '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

LaurentPolynomial LaurentPolynomial::constant(Coefficient c, char variable) {
  return monomial(c, 0, variable);
}

LaurentPolynomial LaurentPolynomial::monomial(Coefficient c, int exponent, char variable) {
  LaurentPolynomial p(variable);
  if (c != 0) {
    p.low_ = exponent;
    p.coeffs_.push_back(c);
  }
  return p;
}

LaurentPolynomial LaurentPolynomial::from_terms(const std::vector<Term>& terms, char variable) {
  LaurentPolynomial p(variable);
  for (const auto& [e, c] : terms) p += monomial(c, e, variable);
  return p;
}

LaurentPolynomial LaurentPolynomial::with_variable(char variable) const {
  LaurentPolynomial p = *this;
  p.var_ = variable;
  return p;
}

Coefficient LaurentPolynomial::coefficient(int exponent) const noexcept {
  if (coeffs_.empty() || exponent < low_ || exponent > max_exponent()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::size_t LaurentPolynomial::term_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c != 0; }));
}

std::vector<LaurentPolynomial::Term> LaurentPolynomial::terms() const {
  std::vector<Term> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  }
  return out;
}

void LaurentPolynomial::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](Coefficient c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& other) const {
  if (var_ != other.var_ && !is_zero() && !other.is_zero()) {
    throw std::invalid_argument("LaurentPolynomial: mixing variables");
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  check_compatible(rhs);
  if (rhs.is_zero()) return *this;
  if (is_zero()) {
    *this = rhs;
    return *this;
  }
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(max_exponent(), rhs.max_exponent());
  if (lo < low_) coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
  low_ = lo;
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    auto& slot = coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + i];
    slot = checked_add(slot, rhs.coeffs_[i]);
  }
  normalize();
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& rhs) {
  return *this += -rhs;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial p = *this;
  for (auto& c : p.coeffs_) c = checked_mul(c, -1);
  return p;
}

LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs) {
  lhs.check_compatible(rhs);
  LaurentPolynomial out(lhs.is_zero() ? rhs.var_ : lhs.var_);
  if (lhs.is_zero() || rhs.is_zero()) return out;
  out.low_ = lhs.low_ + rhs.low_;
  out.coeffs_.assign(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      auto& slot = out.coeffs_[i + j];
      slot = checked_add(slot, checked_mul(lhs.coeffs_[i], rhs.coeffs_[j]));
    }
  }
  out.normalize();
  return out;
}

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial p = *this;
  if (!p.is_zero()) p.low_ += k;
  return p;
}

LaurentPolynomial LaurentPolynomial::substitute_power(int k) const {
  if (k == 0) throw std::invalid_argument("LaurentPolynomial: substitute_power(0)");
  LaurentPolynomial out(var_);
  for (const auto& [e, c] : terms()) out += monomial(c, e * k, var_);
  return out;
}

LaurentPolynomial LaurentPolynomial::divide_exponents(int k) const {
  if (k == 0) throw std::invalid_argument("LaurentPolynomial: divide_exponents(0)");
  LaurentPolynomial out(var_);
  for (const auto& [e, c] : terms()) {
    if (e % k != 0) throw std::domain_error("LaurentPolynomial: exponent not divisible");
    out += monomial(c, e / k, var_);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::pow(unsigned exponent) const {
  LaurentPolynomial result = constant(1, var_);
  LaurentPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::optional<LaurentPolynomial> LaurentPolynomial::exact_divide(const LaurentPolynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) return std::nullopt;
  const Coefficient lead = divisor.leading_coefficient();
  if (lead != 1 && lead != -1) return std::nullopt;
  LaurentPolynomial quotient(var_);
  LaurentPolynomial rest = *this;
  const int dspan = divisor.max_exponent() - divisor.min_exponent();
  while (!rest.is_zero()) {
    if (rest.max_exponent() - rest.min_exponent() < dspan) return std::nullopt;
    const int e = rest.max_exponent() - divisor.max_exponent();
    const Coefficient c = rest.leading_coefficient() * lead;
    auto step = monomial(c, e, var_);
    quotient += step;
    rest -= step * divisor;
  }
  return quotient;
}

std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : terms()) {
    if (!out.empty()) out += '+';
    out += std::to_string(c);
    out += '*';
    out += var_;
    out += '^';
    out += std::to_string(e);
  }
  return out;
}

LaurentPolynomial LaurentPolynomial::parse(std::string_view text, char variable) {
  LaurentPolynomial out(variable);
  if (text == "0") return out;
  if (text.empty()) throw std::invalid_argument("LaurentPolynomial: empty text");
  std::size_t pos = 0;
  while (pos < text.size()) {
    // A '+' separates terms; a '-' right after it belongs to the coefficient.
    std::size_t end = text.find('+', pos + 1);
    if (end == std::string_view::npos) end = text.size();
    std::string_view term = text.substr(pos, end - pos);
    const std::string marker = std::string("*") + variable + "^";
    const auto star = term.find(marker);
    if (star == std::string_view::npos) {
      out += constant(parse_integer(term), variable);
    } else {
      const Coefficient c = parse_integer(term.substr(0, star));
      const Coefficient e = parse_integer(term.substr(star + marker.size()));
      out += monomial(c, static_cast<int>(e), variable);
    }
    pos = end + 1;
  }
  return out;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  const auto ta = a.terms();
  const auto tb = b.terms();
  return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(), tb.end());
}

}  // namespace fpb
