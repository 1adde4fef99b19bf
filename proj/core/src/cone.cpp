#include "scrolls/cone.hpp"

#include <algorithm>

#include "scrolls/error.hpp"

namespace scrolls {

std::string_view to_string(ConeCase c) noexcept {
  switch (c) {
    case ConeCase::Base: return "BASE";
    case ConeCase::SmallerCone: return "SMALLER_CONE";
    case ConeCase::ConeOverSection: return "CONE_OVER_SECTION";
  }
  return "UNKNOWN";
}

ConeSectionResult classify_cone_section(const ScrollType& a,
                                        std::span<const PrimeField::Elem> vertex_coeffs,
                                        const SectionForm& rest) {
  const int k = a.zero_count();
  if (k == 0) throw Error(Errc::InvalidArgument, "scroll type has no zero part, so it is not a cone");
  if (vertex_coeffs.size() != static_cast<std::size_t>(k))
    throw Error(Errc::Length, "expected " + std::to_string(k) + " vertex coefficients, got " +
                                  std::to_string(vertex_coeffs.size()));
  const ScrollType base = a.positive_part();
  if (rest.scroll() != base)
    throw Error(Errc::InvalidArgument, "section form must live on the base S(" +
                                           format_sequence(base.parts()) + ")");

  const PrimeField& F = rest.field();
  const bool touches_vertex = std::any_of(vertex_coeffs.begin(), vertex_coeffs.end(),
                                          [&](PrimeField::Elem c) { return c % F.characteristic() != 0; });
  if (!touches_vertex && rest.is_zero()) throw Error(Errc::AllZero, "the zero form defines no hyperplane");

  if (touches_vertex) {
    if (k == 1) return {ConeCase::Base, base, std::nullopt};
    std::vector<int> parts(static_cast<std::size_t>(k - 1), 0);
    parts.insert(parts.end(), base.parts().begin(), base.parts().end());
    return {ConeCase::SmallerCone, ScrollType(std::move(parts)), std::nullopt};
  }

  SectionDecomposition dec = analyze_section_form(rest);
  std::vector<int> parts(static_cast<std::size_t>(k), 0);
  parts.insert(parts.end(), dec.scroll_part.parts().begin(), dec.scroll_part.parts().end());
  return {ConeCase::ConeOverSection, ScrollType(std::move(parts)), std::move(dec)};
}

}  // namespace scrolls
