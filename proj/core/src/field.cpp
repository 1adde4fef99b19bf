#include "scrolls/field.hpp"

#include <string>

#include "scrolls/error.hpp"

namespace scrolls {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
    throw Error(Errc::InvalidArgument,
                "field characteristic must be a prime below 2^32, got " + std::to_string(p));
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Elem PrimeField::pow(Elem a, std::uint64_t e) const noexcept {
  Elem result = 1 % p_;
  Elem base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(Errc::InvalidArgument, "inverse of zero");
  return pow(a, p_ - 2);
}

}  // namespace scrolls
