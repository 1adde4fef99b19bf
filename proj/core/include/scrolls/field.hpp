#ifndef SCROLLS_FIELD_HPP
#define SCROLLS_FIELD_HPP

#include <cstdint>

namespace scrolls {

/// The prime field F_p, p < 2^32. Elements are canonical residues in [0, p).
class PrimeField {
public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kDefaultCharacteristic = 1000003;

  /// Throws Error(InvalidArgument) unless p is a prime below 2^32.
  explicit PrimeField(std::uint64_t p = kDefaultCharacteristic);

  std::uint32_t characteristic() const noexcept { return p_; }

  Elem reduce(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const noexcept {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  Elem sub(Elem a, Elem b) const noexcept { return a >= b ? a - b : static_cast<Elem>(a + (p_ - b)); }
  Elem neg(Elem a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const noexcept {
    return static_cast<Elem>((std::uint64_t{a} * b) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Inverse of a non-zero element.
  Elem inv(Elem a) const;

  /// Representative in (-p/2, p/2], for printing.
  std::int64_t centered(Elem a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace scrolls

#endif  // SCROLLS_FIELD_HPP
