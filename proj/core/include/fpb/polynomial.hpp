#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fpb {

// Exact integer Laurent polynomial in one formal variable.
//
// Coefficients are stored densely from the lowest nonzero exponent up to the
// highest; a zero polynomial has no stored coefficients. Arithmetic is
// checked and throws std::overflow_error instead of wrapping.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;
  using Term = std::pair<int, Coefficient>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(char variable) : var_(variable) {}

  static LaurentPolynomial constant(Coefficient c, char variable = 'A');
  static LaurentPolynomial monomial(Coefficient c, int exponent, char variable = 'A');
  static LaurentPolynomial from_terms(const std::vector<Term>& terms, char variable = 'A');

  char variable() const noexcept { return var_; }
  LaurentPolynomial with_variable(char variable) const;

  bool is_zero() const noexcept { return coeffs_.empty(); }
  // Undefined for the zero polynomial; callers check is_zero() first.
  int min_exponent() const noexcept { return low_; }
  int max_exponent() const noexcept { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coefficient(int exponent) const noexcept;
  Coefficient leading_coefficient() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
  std::size_t term_count() const noexcept;

  // Nonzero terms in ascending exponent order.
  std::vector<Term> terms() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator-=(const LaurentPolynomial& rhs);
  LaurentPolynomial& operator*=(const LaurentPolynomial& rhs);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs += rhs; }
  friend LaurentPolynomial operator-(LaurentPolynomial lhs, const LaurentPolynomial& rhs) { return lhs -= rhs; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& lhs, const LaurentPolynomial& rhs);

  // Multiplies by var^k.
  LaurentPolynomial shifted(int k) const;
  // Substitutes var -> var^k; k = -1 is the mirror map, k = 0 is rejected.
  LaurentPolynomial substitute_power(int k) const;
  // Maps exponent e to e / k; every exponent must be divisible by k.
  LaurentPolynomial divide_exponents(int k) const;
  LaurentPolynomial pow(unsigned exponent) const;

  // Exact quotient when divisor has a unit (+-1) leading coefficient and
  // divides *this; nullopt otherwise.
  std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& divisor) const;

  // Sparse text form "c*v^e" joined by '+', ascending exponents; "0" for zero.
  std::string to_string() const;
  static LaurentPolynomial parse(std::string_view text, char variable);

  // Lexicographic order on the ascending (exponent, coefficient) encoding.
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return (a.is_zero() && b.is_zero()) ||
           (a.var_ == b.var_ && a.low_ == b.low_ && a.coeffs_ == b.coeffs_);
  }

 private:
  void normalize();
  void check_compatible(const LaurentPolynomial& other) const;

  char var_ = 'A';
  int low_ = 0;
  std::vector<Coefficient> coeffs_;
};

}  // namespace fpb
