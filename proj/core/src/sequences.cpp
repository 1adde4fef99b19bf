#include "scrolls/sequences.hpp"

#include <numeric>
#include <sstream>

#include "scrolls/error.hpp"

namespace scrolls {

std::string_view to_string(Violation v) noexcept {
  switch (v) {
    case Violation::Sum: return "SUM";
    case Violation::Pointwise: return "POINTWISE";
    case Violation::Tail: return "TAIL";
    case Violation::MultiplicityBound: return "MULTIPLICITY_BOUND";
    case Violation::Positivity: return "POSITIVITY";
    case Violation::Length: return "LENGTH";
  }
  return "UNKNOWN";
}

namespace {

ValidityReport fail(Violation v, std::optional<int> pivot, std::string detail) {
  return ValidityReport{false, v, pivot, std::move(detail)};
}

std::optional<int> find_pivot(const ScrollType& a, const ScrollType& b) {
  for (std::size_t j = 0; j < b.size(); ++j)
    if (a[j] < b[j]) return static_cast<int>(j) + 1;
  return std::nullopt;
}

// Length and positivity preconditions shared by both checkers.
std::optional<ValidityReport> check_shape(const ScrollType& a, const ScrollType& b,
                                         bool allow_zero_a = false) {
  if (a.dim() < 2)
    return fail(Violation::Length, std::nullopt, "scroll dimension must be at least 2");
  if (b.size() + 1 != a.size()) {
    std::ostringstream s;
    s << "b has length " << b.size() << ", expected " << a.size() - 1;
    return fail(Violation::Length, std::nullopt, s.str());
  }
  if ((!allow_zero_a && !a.is_positive()) || !b.is_positive())
    return fail(Violation::Positivity, find_pivot(a, b), "all parts must be positive");
  return std::nullopt;
}

std::optional<ValidityReport> check_pointwise_and_tail(const ScrollType& a, const ScrollType& b,
                                                       std::optional<int> pivot) {
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (a[j] > b[j]) {
      std::ostringstream s;
      s << "a_" << j + 1 << " = " << a[j] << " > b_" << j + 1 << " = " << b[j];
      return fail(Violation::Pointwise, pivot, s.str());
    }
  }
  if (pivot) {
    for (std::size_t j = static_cast<std::size_t>(*pivot) - 1; j < b.size(); ++j) {
      if (b[j] < a[j + 1]) {
        std::ostringstream s;
        s << "b_" << j + 1 << " = " << b[j] << " < a_" << j + 2 << " = " << a[j + 1]
          << " with v = " << *pivot;
        return fail(Violation::Tail, pivot, s.str());
      }
    }
  }
  return std::nullopt;
}

// Weakly increasing sequences of length `len`, sum `total`, entry j at
// least max(1, lower[j]); emitted in lexicographic order.
template <typename Emit>
void for_each_bounded_sequence(std::span<const int> lower, int total, Emit&& emit) {
  const std::size_t len = lower.size();
  std::vector<int> current(len);
  auto rec = [&](auto&& self, std::size_t j, int prev, int remaining) -> void {
    if (j == len) {
      if (remaining == 0) emit(current);
      return;
    }
    const int slots = static_cast<int>(len - j);
    for (int x = std::max({prev, lower[j], 1}); x * slots <= remaining; ++x) {
      int rest_min = 0;
      for (std::size_t k = j + 1; k < len; ++k) rest_min += std::max(x, lower[k]);
      if (j + 1 == len) {
        if (x != remaining) continue;
      } else if (remaining - x < rest_min) {
        break;
      }
      current[j] = x;
      self(self, j + 1, x, remaining - x);
    }
  };
  rec(rec, 0, 1, total);
}

void require_positive_scroll(const ScrollType& a) {
  if (a.dim() < 2) throw Error(Errc::Length, "scroll dimension must be at least 2");
  if (!a.is_positive()) throw Error(Errc::Positivity, "scroll type must have positive parts");
}

ValidityReport check_sections_impl(const ScrollType& a, const ScrollType& b, bool allow_zero_a) {
  if (auto bad = check_shape(a, b, allow_zero_a)) return *bad;
  const auto pivot = find_pivot(a, b);
  if (a.degree() != b.degree()) {
    std::ostringstream s;
    s << "sum(a) = " << a.degree() << " differs from sum(b) = " << b.degree();
    return fail(Violation::Sum, pivot, s.str());
  }
  if (auto bad = check_pointwise_and_tail(a, b, pivot)) return *bad;
  return ValidityReport{true, std::nullopt, pivot, "conditions hold"};
}

}  // namespace

ValidityReport check_section_conditions(const ScrollType& a, const ScrollType& b) {
  return check_sections_impl(a, b, false);
}

ValidityReport check_section_conditions_relaxed(const ScrollType& a, const ScrollType& b) {
  return check_sections_impl(a, b, true);
}

ValidityReport check_reducible_conditions(const ScrollType& a, const ScrollType& b,
                                          const MultiplicityMultiset& m) {
  if (auto bad = check_shape(a, b)) return *bad;
  const auto pivot = find_pivot(a, b);
  if (m.total() > a.back()) {
    std::ostringstream s;
    s << "sum(m) = " << m.total() << " exceeds a_d = " << a.back();
    return fail(Violation::MultiplicityBound, pivot, s.str());
  }
  if (a.degree() != b.degree() + m.total()) {
    std::ostringstream s;
    s << "sum(a) = " << a.degree() << " differs from sum(b) + sum(m) = "
      << b.degree() + m.total();
    return fail(Violation::Sum, pivot, s.str());
  }
  if (auto bad = check_pointwise_and_tail(a, b, pivot)) return *bad;
  return ValidityReport{true, std::nullopt, pivot, "conditions hold"};
}

std::vector<ScrollType> enumerate_sections(const ScrollType& a) {
  require_positive_scroll(a);
  std::vector<ScrollType> out;
  const auto lower = a.parts().first(a.size() - 1);
  for_each_bounded_sequence(lower, a.degree(), [&](const std::vector<int>& seq) {
    ScrollType b(seq);
    if (check_section_conditions(a, b).valid) out.push_back(std::move(b));
  });
  return out;
}

std::vector<ReducibleBucket> enumerate_reducible_components(const ScrollType& a,
                                                            bool expand_multiplicities) {
  require_positive_scroll(a);
  std::vector<ReducibleBucket> buckets;
  const auto lower = a.parts().first(a.size() - 1);
  for (int c = 1; c <= a.back(); ++c) {
    ReducibleBucket bucket;
    bucket.deficit = c;
    bucket.degree = a.degree() - c;
    // Only the total of m enters the conditions, so {c} stands in for every m.
    const MultiplicityMultiset single({c});
    for_each_bounded_sequence(lower, bucket.degree, [&](const std::vector<int>& seq) {
      ScrollType b(seq);
      if (check_reducible_conditions(a, b, single).valid) bucket.components.push_back(std::move(b));
    });
    if (expand_multiplicities)
      for (auto& p : integer_partitions(c)) bucket.multiplicities.emplace_back(std::move(p));
    buckets.push_back(std::move(bucket));
  }
  return buckets;
}

std::size_t total_components(const std::vector<ReducibleBucket>& buckets) {
  return std::accumulate(buckets.begin(), buckets.end(), std::size_t{0},
                         [](std::size_t acc, const ReducibleBucket& b) {
                           return acc + b.components.size();
                         });
}

std::vector<std::vector<int>> integer_partitions(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "partitions need n >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int min_part) -> void {
    for (int x = min_part; x <= remaining; ++x) {
      if (x != remaining && 2 * x > remaining) continue;
      current.push_back(x);
      if (x == remaining)
        out.push_back(current);
      else
        self(self, remaining - x, x);
      current.pop_back();
    }
  };
  rec(rec, n, 1);
  return out;
}

}  // namespace scrolls
