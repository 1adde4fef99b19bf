#include "scrolls/series.hpp"

#include <sstream>

#include "scrolls/error.hpp"

namespace scrolls {

namespace {

using Coeff = IntPolynomial::Coeff;

Coeff checked_add(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Internal, "integer overflow in series");
  return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Internal, "integer overflow in series");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
  Coeff r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Internal, "integer overflow in series");
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial::IntPolynomial(std::initializer_list<Coeff> coeffs)
    : IntPolynomial(std::vector<Coeff>(coeffs)) {}

IntPolynomial IntPolynomial::monomial(int exponent, Coeff c) {
  if (exponent < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  std::vector<Coeff> v(static_cast<std::size_t>(exponent) + 1, 0);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Coeff IntPolynomial::operator[](int i) const noexcept {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Coeff IntPolynomial::evaluate_at_one() const {
  Coeff s = 0;
  for (Coeff c : coeffs_) s = checked_add(s, c);
  return s;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Coeff> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = checked_mul(coeffs_[i], static_cast<Coeff>(i));
  return IntPolynomial(std::move(out));
}

IntPolynomial operator+(const IntPolynomial& l, const IntPolynomial& r) {
  std::vector<Coeff> out(std::max(l.coeffs_.size(), r.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = checked_add(l[static_cast<int>(i)], r[static_cast<int>(i)]);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& l, const IntPolynomial& r) {
  std::vector<Coeff> out(std::max(l.coeffs_.size(), r.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = checked_sub(l[static_cast<int>(i)], r[static_cast<int>(i)]);
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& l, const IntPolynomial& r) {
  if (l.is_zero() || r.is_zero()) return {};
  std::vector<Coeff> out(l.coeffs_.size() + r.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < l.coeffs_.size(); ++i) {
    if (l.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j)
      out[i + j] = checked_add(out[i + j], checked_mul(l.coeffs_[i], r.coeffs_[j]));
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_by_one_minus_z(Coeff& remainder) const {
  // p = (1 - z) q + r: q_i = sum_{k <= i} p_k for i < deg p, r = p(1).
  if (coeffs_.empty()) {
    remainder = 0;
    return {};
  }
  std::vector<Coeff> q(coeffs_.size() - 1, 0);
  Coeff running = 0;
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) {
    running = checked_add(running, coeffs_[i]);
    q[i] = running;
  }
  remainder = checked_add(running, coeffs_.back());
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Coeff c = coeffs_[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const Coeff mag = c < 0 ? -c : c;
    if (i == 0) {
      out << mag;
    } else {
      if (mag != 1) out << mag << "*";
      out << "z";
      if (i > 1) out << "^" << i;
    }
    first = false;
  }
  return out.str();
}

IntPolynomial koszul_numerator(const ScrollType& a) {
  IntPolynomial product{1};
  for (int ai : a.parts()) product = product * (IntPolynomial{1} - IntPolynomial::monomial(ai));
  return product;
}

IntPolynomial positive_truncate(const IntPolynomial& series, int bound) {
  if (bound < 0) throw Error(Errc::InvalidArgument, "truncation bound must be non-negative");
  std::vector<Coeff> out;
  for (int i = 0; i <= bound; ++i) {
    const Coeff c = series[i];
    if (c <= 0) break;
    out.push_back(c);
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_by_one_minus_z_squared(const IntPolynomial& p) {
  Coeff r1 = 0, r2 = 0;
  IntPolynomial q1 = p.divide_by_one_minus_z(r1);
  if (r1 != 0) throw Error(Errc::NotDivisible, "numerator does not vanish at z = 1");
  IntPolynomial q2 = q1.divide_by_one_minus_z(r2);
  if (r2 != 0)
    throw Error(Errc::NotDivisible, "derivative of the numerator does not vanish at z = 1");
  return q2;
}

GenericSectionData generic_section_data(const ScrollType& a) {
  if (a.dim() < 2) throw Error(Errc::Length, "scroll dimension must be at least 2");
  if (!a.is_positive()) throw Error(Errc::Positivity, "scroll type must have positive parts");

  // (1 - z)^d divides the Koszul numerator, so for d >= 2 the series is a
  // polynomial and the division is exact.
  const IntPolynomial series = divide_by_one_minus_z_squared(koszul_numerator(a));
  IntPolynomial truncated = positive_truncate(series, a.degree());

  const IntPolynomial one_minus_z{1, -1};
  IntPolynomial generators = one_minus_z * one_minus_z * truncated - IntPolynomial{1};
  for (int ai : a.parts()) generators = generators + IntPolynomial::monomial(ai);

  std::vector<int> degrees;
  for (int e = 0; e <= generators.degree(); ++e) {
    const Coeff c = generators[e];
    if (c < 0)
      throw Error(Errc::Internal, "negative coefficient in generic syzygy polynomial: " +
                                      generators.to_string());
    if (c > 0 && e == 0)
      throw Error(Errc::Internal, "syzygy in degree 0: " + generators.to_string());
    degrees.insert(degrees.end(), static_cast<std::size_t>(c), e);
    if (degrees.size() > a.size()) break;
  }
  if (degrees.size() + 1 != a.size())
    throw Error(Errc::Internal, "generic section has wrong length: " + generators.to_string());
  return GenericSectionData{ScrollType(std::move(degrees)), std::move(truncated)};
}

ScrollType generic_section(const ScrollType& a) { return generic_section_data(a).section; }

IntPolynomial hilbert_numerator_check(const ScrollType& a, const ScrollType& b) {
  if (b.size() + 1 != a.size()) throw Error(Errc::Length, "b must have length d - 1");
  IntPolynomial numerator{1};
  for (int ai : a.parts()) numerator = numerator - IntPolynomial::monomial(ai);
  for (int bi : b.parts()) numerator = numerator + IntPolynomial::monomial(bi);
  return divide_by_one_minus_z_squared(numerator);
}

}  // namespace scrolls
