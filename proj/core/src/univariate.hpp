#ifndef SCROLLS_SRC_UNIVARIATE_HPP
#define SCROLLS_SRC_UNIVARIATE_HPP

// Dense univariate polynomials over F_p, lowest coefficient first, always
// trimmed. A binary form f of degree n corresponds to t -> f(1, t); the
// power of x dividing f is n minus the degree of this polynomial.

#include <utility>
#include <vector>

#include "scrolls/error.hpp"
#include "scrolls/field.hpp"

namespace scrolls::detail {

using Elem = PrimeField::Elem;
using UPoly = std::vector<Elem>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

inline UPoly make_monic(const PrimeField& F, UPoly p) {
  if (p.empty()) return p;
  const Elem inv = F.inv(p.back());
  for (auto& c : p) c = F.mul(c, inv);
  return p;
}

inline UPoly derivative(const PrimeField& F, const UPoly& p) {
  if (p.size() <= 1) return {};
  UPoly out(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) out[i - 1] = F.mul(p[i], F.reduce(static_cast<long long>(i)));
  trim(out);
  return out;
}

inline UPoly sub(const PrimeField& F, const UPoly& a, const UPoly& b) {
  UPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  trim(out);
  return out;
}

/// a = q b + r with deg r < deg b; b non-zero.
inline std::pair<UPoly, UPoly> divmod(const PrimeField& F, UPoly a, const UPoly& b) {
  if (b.empty()) throw Error(Errc::Internal, "polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {UPoly{}, std::move(a)};
  const Elem lead_inv = F.inv(b.back());
  UPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Elem c = F.mul(a[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = F.sub(a[k + i], F.mul(c, b[i]));
  }
  trim(q);
  trim(a);
  return {std::move(q), std::move(a)};
}

inline UPoly exact_quotient(const PrimeField& F, const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(F, a, b);
  if (!r.empty()) throw Error(Errc::Internal, "inexact univariate division");
  return q;
}

/// Monic gcd; gcd(0, 0) = 0.
inline UPoly gcd(const PrimeField& F, UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divmod(F, std::move(a), b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(F, std::move(a));
}

}  // namespace scrolls::detail

#endif  // SCROLLS_SRC_UNIVARIATE_HPP
