#ifndef SCROLLS_BINARY_FORM_HPP
#define SCROLLS_BINARY_FORM_HPP

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scrolls/field.hpp"
#include "scrolls/scroll_type.hpp"

namespace scrolls {

/// A homogeneous polynomial of declared degree n in x, y over F_p. The
/// coefficient of x^{n-j} y^j is stored at index j. A zero form keeps its
/// declared degree, so that empty slots of a section form still carry a_i.
class BinaryForm {
public:
  using Elem = PrimeField::Elem;

  /// The zero form of the given degree.
  BinaryForm(PrimeField field, int degree);
  /// coeffs.size() must equal degree + 1.
  BinaryForm(PrimeField field, int degree, std::vector<Elem> coeffs);

  /// c * x^x_exp * y^y_exp.
  static BinaryForm monomial(PrimeField field, int x_exp, int y_exp, Elem c = 1);

  const PrimeField& field() const noexcept { return field_; }
  int degree() const noexcept { return degree_; }
  std::span<const Elem> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^{degree - j} y^j.
  Elem coeff(int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  bool is_zero() const noexcept;

  /// Largest k with x^k dividing the form; only meaningful for non-zero forms.
  int x_multiplicity() const noexcept;

  BinaryForm scaled(Elem c) const;
  BinaryForm negated() const;
  /// Scaled so the coefficient of the highest power of x present is 1.
  BinaryForm normalized() const;

  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

  /// "x^2*y^3 + 2*x*y^4"; coefficients printed in (-p/2, p/2]; "0" if zero.
  std::string to_string() const;

  /// Parses the text format; every term must have total degree `degree`.
  /// Throws Error(Parse).
  static BinaryForm parse(PrimeField field, int degree, std::string_view text);

private:
  PrimeField field_;
  int degree_;
  std::vector<Elem> coeffs_;
};

enum class FormOp { Add, Mul };

/// ADD needs equal declared degrees (Error(DegreeMismatch) otherwise); MUL
/// adds degrees.
BinaryForm form_arithmetic(FormOp op, const BinaryForm& f, const BinaryForm& g);

/// Monic gcd (normalized as in BinaryForm::normalized) of the non-zero
/// forms; degree 0 means coprime. Throws Error(AllZero) if every form is 0.
BinaryForm gcd_of_forms(std::span<const BinaryForm> forms);

/// q with f = g * q exactly. Throws Error(NotDivisible) with the remainder in
/// the message.
BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g);

struct SquarefreeFactor {
  int multiplicity;
  BinaryForm factor;  ///< squarefree, pairwise coprime with the other factors
};

/// g = unit * prod_j h_j^j. Factors with degree 0 are omitted; ordered by
/// multiplicity. Throws Error(CharTooSmall) if p <= deg g.
std::vector<SquarefreeFactor> squarefree_decomposition(const BinaryForm& g);

/// Multiplicities of the distinct points of P^1 (over the algebraic closure)
/// where g vanishes: multiplicity j appears deg(h_j) times.
MultiplicityMultiset squarefree_multiplicities(const BinaryForm& g);

/// Uniformly random coefficients. Deterministic for a given seed.
BinaryForm random_form(const PrimeField& field, int degree, std::uint64_t seed);
BinaryForm random_form(const PrimeField& field, int degree, std::mt19937_64& rng);

}  // namespace scrolls

#endif  // SCROLLS_BINARY_FORM_HPP
