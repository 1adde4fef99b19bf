#ifndef SCROLLS_SEQUENCES_HPP
#define SCROLLS_SEQUENCES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scrolls/scroll_type.hpp"

namespace scrolls {

enum class Violation { Sum, Pointwise, Tail, MultiplicityBound, Positivity, Length };

std::string_view to_string(Violation v) noexcept;

/// Outcome of a numerical section check. `violated` names the first failed
/// condition in the order sum, pointwise, tail. `pivot` is the 1-based
/// index min{ j : a_j < b_j } whenever such an index exists.
struct ValidityReport {
  bool valid = false;
  std::optional<Violation> violated;
  std::optional<int> pivot;
  std::string detail;
};

/// Whether S(b) is an irreducible hyperplane section of S(a): equal sums,
/// a_j <= b_j, and b_j >= a_{j+1} from the pivot on. Length and
/// positivity problems are reported, not thrown.
ValidityReport check_section_conditions(const ScrollType& a, const ScrollType& b);

/// As check_section_conditions, but a may contain zero parts. This is the
/// shape of the shifted pair used when building reducible sections.
ValidityReport check_section_conditions_relaxed(const ScrollType& a, const ScrollType& b);

/// Whether S(b) together with multiplicity structures m occurs as a
/// reducible hyperplane section of S(a). With an empty m this coincides
/// with check_section_conditions.
ValidityReport check_reducible_conditions(const ScrollType& a, const ScrollType& b,
                                          const MultiplicityMultiset& m);

/// All b with check_section_conditions(a, b) valid, lexicographic order.
/// Throws Error(Length) for d < 2 and Error(Positivity) for cones.
std::vector<ScrollType> enumerate_sections(const ScrollType& a);

/// Scroll components of reducible sections, bucketed by the deficit
/// c = sum(a) - sum(b). Every c in 1..a_d gets a bucket, empty or not.
struct ReducibleBucket {
  int degree = 0;   ///< sum(b)
  int deficit = 0;  ///< c, the total multiplicity of the linear components
  std::vector<ScrollType> components;
  /// Partitions of c, as multiplicity multisets; filled only on request.
  std::vector<MultiplicityMultiset> multiplicities;
};

/// Buckets in descending degree order; components lexicographic within a
/// bucket. With expand_multiplicities each bucket also lists every m.
std::vector<ReducibleBucket> enumerate_reducible_components(const ScrollType& a,
                                                            bool expand_multiplicities = false);

/// Number of distinct scroll components over all buckets.
std::size_t total_components(const std::vector<ReducibleBucket>& buckets);

/// Partitions of n >= 1, each weakly increasing, in lexicographic order.
std::vector<std::vector<int>> integer_partitions(int n);

}  // namespace scrolls

#endif  // SCROLLS_SEQUENCES_HPP
