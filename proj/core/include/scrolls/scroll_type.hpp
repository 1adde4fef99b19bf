#ifndef SCROLLS_SCROLL_TYPE_HPP
#define SCROLLS_SCROLL_TYPE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace scrolls {

/// The type S(a_1,...,a_d) of a rational normal scroll: a weakly increasing
/// sequence of non-negative integers with at least one positive entry.
/// Zero entries make the scroll a cone; most operations reject them.
class ScrollType {
public:
  /// Largest accepted total degree; keeps all derived quantities far from
  /// integer overflow.
  static constexpr int kMaxDegree = 1 << 20;

  ScrollType() = default;
  explicit ScrollType(std::vector<int> parts);
  ScrollType(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::size_t size() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  int dim() const noexcept { return static_cast<int>(parts_.size()); }
  int degree() const noexcept { return degree_; }
  /// n in P^n: degree + dim - 1.
  int ambient() const noexcept { return degree_ + dim() - 1; }
  int zero_count() const noexcept;
  bool is_positive() const noexcept { return zero_count() == 0; }
  int back() const { return parts_.back(); }

  /// The scroll with all zero entries removed (the base of the cone).
  ScrollType positive_part() const;

  friend bool operator==(const ScrollType&, const ScrollType&) = default;
  friend auto operator<=>(const ScrollType& l, const ScrollType& r) {
    return l.parts_ <=> r.parts_;
  }

private:
  std::vector<int> parts_;
  int degree_ = 0;
};

/// Multiset of positive multiplicities m_1,...,m_s, stored sorted so that
/// equal multisets compare equal.
class MultiplicityMultiset {
public:
  MultiplicityMultiset() = default;
  explicit MultiplicityMultiset(std::vector<int> entries);
  MultiplicityMultiset(std::initializer_list<int> entries);

  std::span<const int> entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  int total() const noexcept { return total_; }

  friend bool operator==(const MultiplicityMultiset&, const MultiplicityMultiset&) = default;

private:
  std::vector<int> entries_;
  int total_ = 0;
};

/// "4,5,6,9"
std::string format_sequence(std::span<const int> values);
/// Parses a comma-separated list of integers; throws Error(Parse).
std::vector<int> parse_sequence(const std::string& text);

}  // namespace scrolls

#endif  // SCROLLS_SCROLL_TYPE_HPP
