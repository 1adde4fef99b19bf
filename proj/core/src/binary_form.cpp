#include "scrolls/binary_form.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

#include "scrolls/error.hpp"
#include "univariate.hpp"

namespace scrolls {

namespace {

void require_same_field(const BinaryForm& f, const BinaryForm& g) {
  if (!(f.field() == g.field()))
    throw Error(Errc::InvalidArgument, "forms live over different fields");
}

detail::UPoly to_upoly(const BinaryForm& f) {
  detail::UPoly p(f.coeffs().begin(), f.coeffs().end());
  detail::trim(p);
  return p;
}

// x^{degree - deg p} * p(x, y) as a form of the given degree.
BinaryForm from_upoly(const PrimeField& F, detail::UPoly p, int degree) {
  if (detail::deg(p) > degree) throw Error(Errc::Internal, "polynomial exceeds form degree");
  p.resize(static_cast<std::size_t>(degree) + 1, 0);
  return BinaryForm(F, degree, std::move(p));
}

}  // namespace

BinaryForm::BinaryForm(PrimeField field, int degree)
    : field_(field), degree_(degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "form degree must be non-negative");
  coeffs_.assign(static_cast<std::size_t>(degree) + 1, 0);
}

BinaryForm::BinaryForm(PrimeField field, int degree, std::vector<Elem> coeffs)
    : field_(field), degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "form degree must be non-negative");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1)
    throw Error(Errc::InvalidArgument, "coefficient vector length must be degree + 1");
  for (auto& c : coeffs_) c %= field_.characteristic();
}

BinaryForm BinaryForm::monomial(PrimeField field, int x_exp, int y_exp, Elem c) {
  if (x_exp < 0 || y_exp < 0) throw Error(Errc::InvalidArgument, "negative exponent");
  BinaryForm f(field, x_exp + y_exp);
  f.coeffs_[static_cast<std::size_t>(y_exp)] = c % field.characteristic();
  return f;
}

bool BinaryForm::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

int BinaryForm::x_multiplicity() const noexcept {
  int top = degree_;
  while (top >= 0 && coeffs_[static_cast<std::size_t>(top)] == 0) --top;
  return top < 0 ? degree_ : degree_ - top;
}

BinaryForm BinaryForm::scaled(Elem c) const {
  BinaryForm out = *this;
  for (auto& v : out.coeffs_) v = field_.mul(v, c % field_.characteristic());
  return out;
}

BinaryForm BinaryForm::negated() const {
  BinaryForm out = *this;
  for (auto& v : out.coeffs_) v = field_.neg(v);
  return out;
}

BinaryForm BinaryForm::normalized() const {
  auto it = std::find_if(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c != 0; });
  if (it == coeffs_.end()) return *this;
  return scaled(field_.inv(*it));
}

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  require_same_field(f, g);
  if (f.degree_ != g.degree_)
    throw Error(Errc::DegreeMismatch, "cannot add forms of degrees " + std::to_string(f.degree_) +
                                          " and " + std::to_string(g.degree_));
  BinaryForm out = f;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i)
    out.coeffs_[i] = f.field_.add(out.coeffs_[i], g.coeffs_[i]);
  return out;
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + g.negated(); }

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  require_same_field(f, g);
  const PrimeField& F = f.field_;
  BinaryForm out(F, f.degree_ + g.degree_);
  for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
      out.coeffs_[i + j] = F.add(out.coeffs_[i + j], F.mul(f.coeffs_[i], g.coeffs_[j]));
  }
  return out;
}

std::string BinaryForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (int j = 0; j <= degree_; ++j) {
    const std::int64_t c = field_.centered(coeffs_[static_cast<std::size_t>(j)]);
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;
    const int xe = degree_ - j;
    const int ye = j;
    if (xe == 0 && ye == 0) {
      out << mag;
      continue;
    }
    bool need_star = false;
    if (mag != 1) {
      out << mag;
      need_star = true;
    }
    if (xe > 0) {
      out << (need_star ? "*" : "") << "x";
      if (xe > 1) out << "^" << xe;
      need_star = true;
    }
    if (ye > 0) {
      out << (need_star ? "*" : "") << "y";
      if (ye > 1) out << "^" << ye;
    }
  }
  return first ? "0" : out.str();
}

BinaryForm BinaryForm::parse(PrimeField field, int degree, std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw Error(Errc::Parse, "empty form");

  BinaryForm out(field, degree);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(Errc::Parse, why + " in form '" + std::string(text) + "'");
  };
  auto read_uint = [&]() -> std::uint64_t {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc() || ptr == s.data() + pos) throw fail("expected a number");
    pos = static_cast<std::size_t>(ptr - s.data());
    return v;
  };

  bool first_term = true;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    } else if (!first_term) {
      throw fail("expected '+' or '-'");
    }
    first_term = false;

    Elem coeff = 1;
    int xe = 0, ye = 0;
    bool expect_factor = true;
    while (expect_factor) {
      if (pos >= s.size()) throw fail("unexpected end");
      const char c = s[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff = field.mul(coeff, static_cast<Elem>(read_uint() % field.characteristic()));
      } else if (c == 'x' || c == 'y') {
        ++pos;
        std::uint64_t e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = read_uint();
        }
        if (e > static_cast<std::uint64_t>(degree)) throw fail("exponent exceeds the form degree");
        (c == 'x' ? xe : ye) += static_cast<int>(e);
      } else {
        throw fail(std::string("unexpected character '") + c + "'");
      }
      expect_factor = pos < s.size() && s[pos] == '*';
      if (expect_factor) ++pos;
    }
    if (coeff == 0) continue;
    if (xe + ye != degree)
      throw fail("term of degree " + std::to_string(xe + ye) + ", expected " +
                 std::to_string(degree));
    if (negative) coeff = field.neg(coeff);
    auto& slot = out.coeffs_[static_cast<std::size_t>(ye)];
    slot = field.add(slot, coeff);
  }
  return out;
}

BinaryForm form_arithmetic(FormOp op, const BinaryForm& f, const BinaryForm& g) {
  return op == FormOp::Add ? f + g : f * g;
}

BinaryForm gcd_of_forms(std::span<const BinaryForm> forms) {
  std::optional<PrimeField> F;
  detail::UPoly g;
  int x_mult = std::numeric_limits<int>::max();
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    if (F && !(*F == f.field())) throw Error(Errc::InvalidArgument, "forms live over different fields");
    F = f.field();
    g = detail::gcd(*F, std::move(g), to_upoly(f));
    x_mult = std::min(x_mult, f.x_multiplicity());
  }
  if (!F) throw Error(Errc::AllZero, "gcd of zero forms");
  return from_upoly(*F, std::move(g), detail::deg(g) + x_mult).normalized();
}

BinaryForm exact_divide(const BinaryForm& f, const BinaryForm& g) {
  require_same_field(f, g);
  if (g.is_zero()) throw Error(Errc::InvalidArgument, "division by the zero form");
  const int qdeg = f.degree() - g.degree();
  if (qdeg < 0)
    throw Error(Errc::NotDivisible, "degree " + std::to_string(f.degree()) + " below divisor degree " +
                                        std::to_string(g.degree()));
  const PrimeField& F = f.field();
  auto [q, r] = detail::divmod(F, to_upoly(f), to_upoly(g));
  if (!r.empty() || detail::deg(q) > qdeg) {
    // Compute the homogeneous remainder f - g*q_trunc for the message.
    if (detail::deg(q) > qdeg) q.resize(static_cast<std::size_t>(qdeg) + 1);
    detail::trim(q);
    const BinaryForm rem = f - g * from_upoly(F, std::move(q), qdeg);
    throw Error(Errc::NotDivisible, "(" + f.to_string() + ") / (" + g.to_string() +
                                        ") leaves remainder " + rem.to_string());
  }
  return from_upoly(F, std::move(q), qdeg);
}

std::vector<SquarefreeFactor> squarefree_decomposition(const BinaryForm& g) {
  if (g.is_zero()) throw Error(Errc::AllZero, "squarefree decomposition of the zero form");
  const PrimeField& F = g.field();
  if (F.characteristic() <= static_cast<std::uint32_t>(g.degree()))
    throw Error(Errc::CharTooSmall, "characteristic " + std::to_string(F.characteristic()) +
                                        " does not exceed degree " + std::to_string(g.degree()));

  // Yun's algorithm on the dehomogenized part; the point x = 0 is added back
  // through the x-multiplicity.
  std::map<int, detail::UPoly> parts;
  detail::UPoly f = detail::make_monic(F, to_upoly(g));
  if (detail::deg(f) > 0) {
    const detail::UPoly df = detail::derivative(F, f);
    const detail::UPoly a0 = detail::gcd(F, f, df);
    detail::UPoly b = detail::exact_quotient(F, f, a0);
    detail::UPoly c = detail::exact_quotient(F, df, a0);
    detail::UPoly d = detail::sub(F, c, detail::derivative(F, b));
    for (int i = 1; detail::deg(b) > 0; ++i) {
      detail::UPoly a = detail::gcd(F, b, d);
      b = detail::exact_quotient(F, b, a);
      c = detail::exact_quotient(F, d, a);
      d = detail::sub(F, c, detail::derivative(F, b));
      if (detail::deg(a) > 0) parts[i] = std::move(a);
    }
  }

  std::vector<SquarefreeFactor> out;
  const int k = g.x_multiplicity();
  const BinaryForm x = BinaryForm::monomial(F, 1, 0);
  for (auto& [mult, poly] : parts) {
    const int dg = detail::deg(poly);
    BinaryForm h = from_upoly(F, std::move(poly), dg);
    if (mult == k) h = h * x;
    out.push_back({mult, std::move(h)});
  }
  if (k > 0 && !parts.contains(k)) {
    out.push_back({k, x});
    std::sort(out.begin(), out.end(),
              [](const SquarefreeFactor& l, const SquarefreeFactor& r) { return l.multiplicity < r.multiplicity; });
  }
  return out;
}

MultiplicityMultiset squarefree_multiplicities(const BinaryForm& g) {
  std::vector<int> entries;
  for (const auto& [mult, h] : squarefree_decomposition(g))
    entries.insert(entries.end(), static_cast<std::size_t>(h.degree()), mult);
  return MultiplicityMultiset(std::move(entries));
}

BinaryForm random_form(const PrimeField& field, int degree, std::mt19937_64& rng) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "form degree must be non-negative");
  const std::uint64_t p = field.characteristic();
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % p;
  std::vector<PrimeField::Elem> coeffs(static_cast<std::size_t>(degree) + 1);
  for (auto& c : coeffs) {
    std::uint64_t v;
    do v = rng(); while (v >= limit);
    c = static_cast<PrimeField::Elem>(v % p);
  }
  return BinaryForm(field, degree, std::move(coeffs));
}

BinaryForm random_form(const PrimeField& field, int degree, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_form(field, degree, rng);
}

}  // namespace scrolls
