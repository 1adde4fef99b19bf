#ifndef SCROLLS_SERIES_HPP
#define SCROLLS_SERIES_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "scrolls/scroll_type.hpp"

namespace scrolls {

/// Polynomial (or truncated power series) in z with int64 coefficients.
/// Every operation checks for overflow and throws Error(Internal) on it.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients.
class IntPolynomial {
public:
  using Coeff = std::int64_t;

  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Coeff> coeffs);
  IntPolynomial(std::initializer_list<Coeff> coeffs);

  static IntPolynomial monomial(int exponent, Coeff c = 1);

  std::span<const Coeff> coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Coefficient of z^i, zero outside the stored range.
  Coeff operator[](int i) const noexcept;

  Coeff evaluate_at_one() const;
  IntPolynomial derivative() const;

  friend IntPolynomial operator+(const IntPolynomial& l, const IntPolynomial& r);
  friend IntPolynomial operator-(const IntPolynomial& l, const IntPolynomial& r);
  friend IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Synthetic division by (1 - z). Returns the quotient and stores the
  /// remainder (a constant) in `remainder`.
  IntPolynomial divide_by_one_minus_z(Coeff& remainder) const;

  /// "1 + 2*z + 3*z^2"
  std::string to_string() const;

private:
  void trim();
  std::vector<Coeff> coeffs_;
};

/// prod_i (1 - z^{a_i}).
IntPolynomial koszul_numerator(const ScrollType& a);

/// Keeps coefficients c_0..c_bound while every coefficient so far is
/// strictly positive; everything from the first c_i <= 0 on becomes zero.
/// Coefficients beyond the stored degree count as zero.
IntPolynomial positive_truncate(const IntPolynomial& series, int bound);

/// Exact division by (1 - z)^2; throws Error(NotDivisible) on a non-zero
/// remainder.
IntPolynomial divide_by_one_minus_z_squared(const IntPolynomial& p);

struct GenericSectionData {
  ScrollType section;
  IntPolynomial hilbert_series;  ///< the truncated series (Hilbert series of A/I)
};

/// Syzygy degrees of general forms of degrees a, read off from the
/// positively truncated series prod(1 - z^{a_i}) / (1 - z)^2.
GenericSectionData generic_section_data(const ScrollType& a);
ScrollType generic_section(const ScrollType& a);

/// Forms N(z) = 1 - sum z^{a_i} + sum z^{b_i} and returns N / (1 - z)^2.
/// Throws Error(Length) on a length mismatch and Error(NotDivisible) when
/// N(1) or N'(1) does not vanish.
IntPolynomial hilbert_numerator_check(const ScrollType& a, const ScrollType& b);

}  // namespace scrolls

#endif  // SCROLLS_SERIES_HPP
