#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pk {

// Exact Laurent polynomial in one variable with 64-bit integer coefficients.
// Stored densely from the lowest nonzero exponent; the zero polynomial has an
// empty coefficient vector. Overflow throws std::overflow_error.
class LaurentPolynomial {
 public:
  using Coefficient = std::int64_t;

  LaurentPolynomial() = default;
  LaurentPolynomial(Coefficient constant);  // NOLINT: implicit by design of arithmetic

  static LaurentPolynomial monomial(Coefficient coeff, int exponent);
  static LaurentPolynomial from_terms(const std::vector<std::pair<int, Coefficient>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  int min_exponent() const { return low_; }
  int max_exponent() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  Coefficient coefficient(int exponent) const;

  // Nonzero (exponent, coefficient) pairs in increasing exponent order.
  std::vector<std::pair<int, Coefficient>> terms() const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& other);
  LaurentPolynomial& operator-=(const LaurentPolynomial& other);
  LaurentPolynomial& operator*=(const LaurentPolynomial& other);
  LaurentPolynomial operator-() const;

  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial pow(unsigned exponent) const;

  // x -> x^-1
  LaurentPolynomial reflected() const;

  // Multiplies every exponent by `factor` (x -> x^factor).
  LaurentPolynomial scaled_exponents(int factor) const;

  // Divides every exponent by `divisor`; throws std::domain_error if some
  // exponent is not a multiple.
  LaurentPolynomial divided_exponents(int divisor) const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;
  // Total order (by lowest exponent, then coefficients) so polynomials can key maps.
  friend std::strong_ordering operator<=>(const LaurentPolynomial& a, const LaurentPolynomial& b);

  // Human-readable form, highest degree last: "-t^-4 + t^-3 + t^-1".
  std::string to_string(std::string_view variable) const;

  // Compact machine form "e:c,e:c,..." (empty string for zero).
  std::string to_term_list() const;
  static LaurentPolynomial from_term_list(std::string_view text);

 private:
  void normalize();

  int low_ = 0;
  std::vector<Coefficient> coeffs_;
};

}  // namespace pk
