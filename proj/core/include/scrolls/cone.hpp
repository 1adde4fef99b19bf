#ifndef SCROLLS_CONE_HPP
#define SCROLLS_CONE_HPP

#include <optional>
#include <span>
#include <string_view>

#include "scrolls/field.hpp"
#include "scrolls/scroll_type.hpp"
#include "scrolls/syzygy.hpp"

namespace scrolls {

enum class ConeCase {
  Base,             ///< H misses the vertex: Y is the base scroll
  SmallerCone,      ///< H meets the vertex without containing it
  ConeOverSection,  ///< H contains the vertex: Y is a cone over a section of the base
};

std::string_view to_string(ConeCase c) noexcept;

struct ConeSectionResult {
  ConeCase kind;
  /// Base / SmallerCone: the section itself. ConeOverSection: the cone
  /// S(0^k, b) over the scroll component b of the base section.
  ScrollType scroll;
  /// ConeOverSection only: the analysis of the hyperplane on the base.
  std::optional<SectionDecomposition> base_section;
};

/// Hyperplane section of the cone S(0^k, a_{k+1}, ..., a_d). The hyperplane
/// is given by k coordinates on the vertex and a section form on the
/// positive part. Throws Error(AllZero) when both are zero.
ConeSectionResult classify_cone_section(const ScrollType& a,
                                        std::span<const PrimeField::Elem> vertex_coeffs,
                                        const SectionForm& rest);

}  // namespace scrolls

#endif  // SCROLLS_CONE_HPP
