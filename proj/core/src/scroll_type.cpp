#include "scrolls/scroll_type.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "scrolls/error.hpp"

namespace scrolls {

ScrollType::ScrollType(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw Error(Errc::Length, "scroll type needs at least one part");
  long long total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw Error(Errc::Positivity, "negative part in scroll type");
    if (i > 0 && parts_[i] < parts_[i - 1])
      throw Error(Errc::InvalidArgument,
                  "scroll type must be weakly increasing: " + format_sequence(parts_));
    total += parts_[i];
    if (total > kMaxDegree) throw Error(Errc::InvalidArgument, "scroll degree too large");
  }
  if (total == 0) throw Error(Errc::Positivity, "scroll type has no positive part");
  degree_ = static_cast<int>(total);
}

ScrollType::ScrollType(std::initializer_list<int> parts)
    : ScrollType(std::vector<int>(parts)) {}

int ScrollType::zero_count() const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), 0));
}

ScrollType ScrollType::positive_part() const {
  std::vector<int> pos;
  std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(pos), [](int x) { return x > 0; });
  return ScrollType(std::move(pos));
}

MultiplicityMultiset::MultiplicityMultiset(std::vector<int> entries) : entries_(std::move(entries)) {
  long long total = 0;
  for (int m : entries_) {
    if (m < 1) throw Error(Errc::Positivity, "multiplicities must be positive");
    total += m;
    if (total > ScrollType::kMaxDegree)
      throw Error(Errc::InvalidArgument, "multiplicity total too large");
  }
  std::sort(entries_.begin(), entries_.end());
  total_ = static_cast<int>(total);
}

MultiplicityMultiset::MultiplicityMultiset(std::initializer_list<int> entries)
    : MultiplicityMultiset(std::vector<int>(entries)) {}

std::string format_sequence(std::span<const int> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

std::vector<int> parse_sequence(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t'; };
  while (true) {
    std::size_t end = text.find(',', pos);
    std::string_view item(text.data() + pos, (end == std::string::npos ? text.size() : end) - pos);
    while (!item.empty() && is_space(item.front())) item.remove_prefix(1);
    while (!item.empty() && is_space(item.back())) item.remove_suffix(1);
    if (item.empty()) throw Error(Errc::Parse, "empty entry in sequence '" + text + "'");
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw Error(Errc::Parse, "not an integer: '" + std::string(item) + "'");
    out.push_back(value);
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace scrolls
