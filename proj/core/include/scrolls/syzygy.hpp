#ifndef SCROLLS_SYZYGY_HPP
#define SCROLLS_SYZYGY_HPP

#include <optional>
#include <span>
#include <vector>

#include "scrolls/binary_form.hpp"
#include "scrolls/field.hpp"
#include "scrolls/scroll_type.hpp"

namespace scrolls {

/// A hyperplane of S(a): L = f_1 s_1 + ... + f_d s_d with deg f_i = a_i.
/// Construction checks the degrees, the common field, and p > sum(a). The
/// all-zero form is representable (cone sections need it) but every
/// analysis rejects it with Error(AllZero).
class SectionForm {
public:
  SectionForm(ScrollType scroll, std::vector<BinaryForm> forms);

  const ScrollType& scroll() const noexcept { return scroll_; }
  std::span<const BinaryForm> forms() const noexcept { return forms_; }
  const BinaryForm& operator[](std::size_t i) const { return forms_[i]; }
  const PrimeField& field() const noexcept { return forms_.front().field(); }
  bool is_zero() const noexcept;

  friend bool operator==(const SectionForm&, const SectionForm&) = default;

private:
  ScrollType scroll_;
  std::vector<BinaryForm> forms_;
};

/// Form with independent uniformly random coefficient forms.
SectionForm random_section_form(const PrimeField& field, const ScrollType& a, std::uint64_t seed);

/// d x (d-1) matrix of binary forms; entry (i, j) is zero or of degree
/// col_degrees[j] - row_degrees[i].
struct SyzygyMatrix {
  std::vector<int> row_degrees;
  std::vector<int> col_degrees;
  std::vector<BinaryForm> entries;  ///< row-major

  std::size_t rows() const noexcept { return row_degrees.size(); }
  std::size_t cols() const noexcept { return col_degrees.size(); }
  const BinaryForm& at(std::size_t i, std::size_t j) const { return entries[i * cols() + j]; }
  bool is_graded() const;
};

/// Minimal generator degrees of the kernel of
///   (g_1, ..., g_d) -> sum g_i f_i,   A(-a_1) + ... + A(-a_d) -> A,
/// found degree by degree from explicit kernel bases: in each degree t the
/// new generators are dim K_t - dim(x K_{t-1} + y K_{t-1}).
/// Returns d - 1 weakly increasing degrees. Throws Error(AllZero).
ScrollType syzygy_degrees(const SectionForm& form);

/// The bidiagonal matrix with y^{b_j - a_j} on the diagonal and
/// x^{b_j - a_{j+1}} below it from the pivot column on. a may contain zero
/// parts. Throws Error(InvalidPair) unless the section conditions hold.
SyzygyMatrix hilbert_burch_matrix(const PrimeField& field, const ScrollType& a,
                                  const ScrollType& b);

/// f_i = (-1)^{i+1} det(Z without row i), i = 1..d, so that every column of Z
/// is a syzygy of (f_1, ..., f_d).
std::vector<BinaryForm> signed_maximal_minors(const SyzygyMatrix& z);

/// Whether sum_i f_i z_{ij} = 0 for every column j.
bool columns_are_syzygies(const SyzygyMatrix& z, std::span<const BinaryForm> forms);

struct ConstructOptions {
  /// Re-derive the requested data from the constructed form and throw
  /// Error(Internal) on mismatch.
  bool verify = true;
};

/// L from the signed maximal minors of hilbert_burch_matrix(a, b).
/// Throws Error(InvalidPair).
SectionForm construct_irreducible_form(const PrimeField& field, const ScrollType& a,
                                       const ScrollType& b, ConstructOptions options = {});

/// A point of P^1, i.e. a linear form up to scalar: x for the point at
/// infinity, y - lambda x otherwise.
struct LinearFactor {
  std::optional<PrimeField::Elem> lambda;

  static LinearFactor infinity() { return {}; }
  static LinearFactor finite(PrimeField::Elem l) { return {l}; }
  BinaryForm form(const PrimeField& field) const;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// x, y, y - x, y - 2x, ...
std::vector<LinearFactor> default_linear_factors(std::size_t count);

/// L = g L' with g = prod l_i^{m_i} (m sorted ascending, paired with the
/// lines in order) and L' from the shifted Hilbert-Burch construction, or
/// L = g s_d when b is a prefix of a. Throws Error(InvalidTriple) and
/// Error(NondistinctLines).
SectionForm construct_reducible_form(const PrimeField& field, const ScrollType& a,
                                     const ScrollType& b, const MultiplicityMultiset& m,
                                     std::optional<std::vector<LinearFactor>> lines = std::nullopt,
                                     ConstructOptions options = {});

struct SectionDecomposition {
  ScrollType scroll_part;               ///< b, the scroll component
  MultiplicityMultiset multiplicities;  ///< empty iff the section is irreducible
  int gcd_degree = 0;                   ///< c = sum(a) - sum(b)
  std::optional<BinaryForm> common_factor;

  bool irreducible() const noexcept { return gcd_degree == 0; }
  friend bool operator==(const SectionDecomposition&, const SectionDecomposition&) = default;
};

/// Splits L = g L' and reads off the scroll component and the
/// multiplicities of the linear components. Throws Error(AllZero).
SectionDecomposition analyze_section_form(const SectionForm& form);

/// (L) is prime iff the non-zero coefficient forms have no common factor.
bool is_prime_section(const SectionForm& form);

}  // namespace scrolls

#endif  // SCROLLS_SYZYGY_HPP
