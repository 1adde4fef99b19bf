#include "scrolls/syzygy.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "linalg.hpp"
#include "scrolls/error.hpp"
#include "scrolls/sequences.hpp"

namespace scrolls {

namespace {

void require_nonzero(const SectionForm& form) {
  if (form.is_zero()) throw Error(Errc::AllZero, "section form has no non-zero coefficient");
}

// Column layout of the degree-t piece of A(-a_1) + ... + A(-a_d): block i
// holds the monomials x^{t-a_i-j} y^j, j = 0..t-a_i.
struct GradedLayout {
  std::vector<std::size_t> offset;
  std::vector<int> length;
  std::size_t total = 0;

  GradedLayout(std::span<const int> a, int t) : offset(a.size()), length(a.size()) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      offset[i] = total;
      length[i] = std::max(0, t - a[i] + 1);
      total += static_cast<std::size_t>(length[i]);
    }
  }
};

}  // namespace

SectionForm::SectionForm(ScrollType scroll, std::vector<BinaryForm> forms)
    : scroll_(std::move(scroll)), forms_(std::move(forms)) {
  if (forms_.size() != scroll_.size())
    throw Error(Errc::Length, "expected " + std::to_string(scroll_.size()) + " coefficient forms, got " +
                                  std::to_string(forms_.size()));
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].degree() != scroll_[i])
      throw Error(Errc::DegreeMismatch, "f" + std::to_string(i + 1) + " has degree " +
                                            std::to_string(forms_[i].degree()) + ", expected " +
                                            std::to_string(scroll_[i]));
    if (!(forms_[i].field() == forms_.front().field()))
      throw Error(Errc::InvalidArgument, "coefficient forms live over different fields");
  }
  if (forms_.front().field().characteristic() <= static_cast<std::uint32_t>(scroll_.degree()))
    throw Error(Errc::CharTooSmall, "characteristic " +
                                        std::to_string(forms_.front().field().characteristic()) +
                                        " must exceed the scroll degree " +
                                        std::to_string(scroll_.degree()));
}

bool SectionForm::is_zero() const noexcept {
  return std::all_of(forms_.begin(), forms_.end(), [](const BinaryForm& f) { return f.is_zero(); });
}

SectionForm random_section_form(const PrimeField& field, const ScrollType& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<BinaryForm> forms;
  for (int ai : a.parts()) forms.push_back(random_form(field, ai, rng));
  return SectionForm(a, std::move(forms));
}

bool SyzygyMatrix::is_graded() const {
  if (entries.size() != rows() * cols()) return false;
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) {
      const auto& e = at(i, j);
      if (!e.is_zero() && e.degree() != col_degrees[j] - row_degrees[i]) return false;
    }
  return true;
}

ScrollType syzygy_degrees(const SectionForm& form) {
  require_nonzero(form);
  const ScrollType& a = form.scroll();
  if (a.dim() < 2) throw Error(Errc::Length, "scroll dimension must be at least 2");
  const PrimeField& F = form.field();
  const std::size_t expected = a.size() - 1;

  std::vector<int> degrees;
  std::vector<detail::Vec> prev_kernel;
  GradedLayout prev_layout(a.parts(), -1);
  for (int t = 0; t <= a.degree() && degrees.size() < expected; ++t) {
    const GradedLayout layout(a.parts(), t);
    if (layout.total == 0) {
      prev_layout = layout;
      continue;
    }

    // Multiplication map (g_i) -> sum g_i f_i into A_t (t + 1 monomials).
    detail::DenseMatrix m(static_cast<std::size_t>(t) + 1, layout.total);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto coeffs = form[i].coeffs();
      for (int j = 0; j < layout.length[i]; ++j)
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          if (coeffs[k]) m.at(static_cast<std::size_t>(j) + k, layout.offset[i] + j) = coeffs[k];
    }
    std::vector<detail::Vec> kernel = detail::nullspace(F, std::move(m));

    // Span of x K_{t-1} and y K_{t-1} inside the degree-t piece.
    detail::EchelonBasis lifted(F, layout.total);
    for (const auto& u : prev_kernel) {
      for (int shift = 0; shift <= 1; ++shift) {
        detail::Vec w(layout.total, 0);
        for (std::size_t i = 0; i < a.size(); ++i)
          for (int j = 0; j < prev_layout.length[i]; ++j)
            w[layout.offset[i] + j + shift] = u[prev_layout.offset[i] + j];
        lifted.insert(std::move(w));
      }
    }
    if (lifted.rank() > kernel.size())
      throw Error(Errc::Internal, "lifted syzygies exceed the kernel dimension");
    degrees.insert(degrees.end(), kernel.size() - lifted.rank(), t);

    prev_kernel = std::move(kernel);
    prev_layout = layout;
  }
  if (degrees.size() != expected) {
    std::ostringstream s;
    s << "found " << degrees.size() << " syzygy generators, expected " << expected;
    throw Error(Errc::Internal, s.str());
  }
  return ScrollType(std::move(degrees));
}

SyzygyMatrix hilbert_burch_matrix(const PrimeField& field, const ScrollType& a,
                                  const ScrollType& b) {
  const ValidityReport report = check_section_conditions_relaxed(a, b);
  if (!report.valid)
    throw Error(Errc::InvalidPair, "(" + format_sequence(a.parts()) + "), (" +
                                       format_sequence(b.parts()) + "): " + report.detail);
  const std::size_t d = a.size();
  const std::size_t pivot = static_cast<std::size_t>(*report.pivot) - 1;  // 0-based

  SyzygyMatrix z;
  z.row_degrees.assign(a.parts().begin(), a.parts().end());
  z.col_degrees.assign(b.parts().begin(), b.parts().end());
  z.entries.reserve(d * (d - 1));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j + 1 < d; ++j)
      z.entries.emplace_back(field, std::max(0, b[j] - a[i]));
  for (std::size_t j = 0; j + 1 < d; ++j) {
    z.entries[j * (d - 1) + j] = BinaryForm::monomial(field, 0, b[j] - a[j]);
    if (j >= pivot) z.entries[(j + 1) * (d - 1) + j] = BinaryForm::monomial(field, b[j] - a[j + 1], 0);
  }
  return z;
}

std::vector<BinaryForm> signed_maximal_minors(const SyzygyMatrix& z) {
  const std::size_t d = z.rows();
  if (d < 2 || z.cols() + 1 != d) throw Error(Errc::Length, "minors need a d x (d-1) matrix");
  if (d > 20) throw Error(Errc::InvalidArgument, "matrix too large for minor expansion");
  if (!z.is_graded()) throw Error(Errc::DegreeMismatch, "matrix is not graded");
  const PrimeField& F = z.entries.front().field();

  // det of rows S (bitmask) against columns 0..|S|-1, by expansion along the
  // last column; nullopt stands for zero.
  std::unordered_map<std::uint32_t, std::optional<BinaryForm>> memo;
  auto det = [&](auto&& self, std::uint32_t rows) -> std::optional<BinaryForm> {
    if (rows == 0) return BinaryForm::monomial(F, 0, 0);
    if (auto it = memo.find(rows); it != memo.end()) return it->second;
    const int k = std::popcount(rows);
    const std::size_t col = static_cast<std::size_t>(k) - 1;
    std::optional<BinaryForm> acc;
    int pos = 0;
    for (std::size_t r = 0; r < d; ++r) {
      if (!(rows >> r & 1U)) continue;
      const BinaryForm& entry = z.at(r, col);
      if (!entry.is_zero()) {
        if (auto sub = self(self, rows & ~(1U << r))) {
          BinaryForm term = entry * *sub;
          if ((pos + static_cast<int>(col)) % 2) term = term.negated();
          acc = acc ? *acc + term : term;
        }
      }
      ++pos;
    }
    if (acc && acc->is_zero()) acc.reset();
    memo.emplace(rows, acc);
    return acc;
  };

  const int col_sum = std::accumulate(z.col_degrees.begin(), z.col_degrees.end(), 0);
  const int row_sum = std::accumulate(z.row_degrees.begin(), z.row_degrees.end(), 0);
  const std::uint32_t all = (1U << d) - 1;
  std::vector<BinaryForm> out;
  for (std::size_t i = 0; i < d; ++i) {
    auto minor = det(det, all & ~(1U << i));
    const int degree = col_sum - (row_sum - z.row_degrees[i]);
    if (!minor) {
      out.emplace_back(F, std::max(0, degree));
      continue;
    }
    out.push_back(i % 2 ? minor->negated() : *minor);
  }
  return out;
}

bool columns_are_syzygies(const SyzygyMatrix& z, std::span<const BinaryForm> forms) {
  if (forms.size() != z.rows()) return false;
  for (std::size_t j = 0; j < z.cols(); ++j) {
    std::optional<BinaryForm> acc;
    for (std::size_t i = 0; i < z.rows(); ++i) {
      if (forms[i].is_zero() || z.at(i, j).is_zero()) continue;
      BinaryForm term = forms[i] * z.at(i, j);
      acc = acc ? *acc + term : term;
    }
    if (acc && !acc->is_zero()) return false;
  }
  return true;
}

SectionForm construct_irreducible_form(const PrimeField& field, const ScrollType& a,
                                       const ScrollType& b, ConstructOptions options) {
  const ValidityReport report = check_section_conditions(a, b);
  if (!report.valid)
    throw Error(Errc::InvalidPair, "(" + format_sequence(a.parts()) + "), (" +
                                       format_sequence(b.parts()) + "): " + report.detail);
  const SyzygyMatrix z = hilbert_burch_matrix(field, a, b);
  SectionForm form(a, signed_maximal_minors(z));
  if (options.verify) {
    if (!columns_are_syzygies(z, form.forms()))
      throw Error(Errc::Internal, "matrix columns are not syzygies of the minors");
    if (!is_prime_section(form)) throw Error(Errc::Internal, "constructed form has a common factor");
    if (syzygy_degrees(form) != b)
      throw Error(Errc::Internal, "constructed form has the wrong syzygy degrees");
  }
  return form;
}

BinaryForm LinearFactor::form(const PrimeField& field) const {
  if (!lambda) return BinaryForm::monomial(field, 1, 0);
  return BinaryForm(field, 1, {field.neg(*lambda % field.characteristic()), 1});
}

std::vector<LinearFactor> default_linear_factors(std::size_t count) {
  std::vector<LinearFactor> out;
  if (count > 0) out.push_back(LinearFactor::infinity());
  for (std::size_t i = 0; out.size() < count; ++i)
    out.push_back(LinearFactor::finite(static_cast<PrimeField::Elem>(i)));
  return out;
}

SectionForm construct_reducible_form(const PrimeField& field, const ScrollType& a,
                                     const ScrollType& b, const MultiplicityMultiset& m,
                                     std::optional<std::vector<LinearFactor>> lines,
                                     ConstructOptions options) {
  if (m.empty()) throw Error(Errc::InvalidTriple, "reducible sections need a non-empty multiplicity set");
  const ValidityReport report = check_reducible_conditions(a, b, m);
  if (!report.valid) throw Error(Errc::InvalidTriple, report.detail);

  std::vector<LinearFactor> factors = lines ? std::move(*lines) : default_linear_factors(m.size());
  if (factors.size() != m.size())
    throw Error(Errc::InvalidArgument, "need one linear factor per multiplicity");
  for (auto& f : factors)
    if (f.lambda) f.lambda = *f.lambda % field.characteristic();
  for (std::size_t i = 0; i < factors.size(); ++i)
    for (std::size_t j = i + 1; j < factors.size(); ++j)
      if (factors[i] == factors[j]) throw Error(Errc::NondistinctLines, "linear factors must be distinct");

  BinaryForm g = BinaryForm::monomial(field, 0, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const BinaryForm l = factors[i].form(field);
    for (int e = 0; e < m.entries()[i]; ++e) g = g * l;
  }

  const std::size_t d = a.size();
  const int c = m.total();
  std::vector<BinaryForm> forms;
  for (std::size_t i = 0; i < d; ++i) forms.emplace_back(field, a[i]);
  if (report.pivot) {
    const std::size_t v = static_cast<std::size_t>(*report.pivot) - 1;
    std::vector<int> shifted_a, shifted_b;
    for (std::size_t i = v; i < d; ++i) shifted_a.push_back(a[i] - c);
    for (std::size_t i = v; i + 1 < d; ++i) shifted_b.push_back(b[i] - c);
    const auto minors = signed_maximal_minors(
        hilbert_burch_matrix(field, ScrollType(shifted_a), ScrollType(shifted_b)));
    for (std::size_t i = v; i < d; ++i)
      forms[i] = minors[i - v].is_zero() ? BinaryForm(field, a[i]) : minors[i - v] * g;
  } else {
    forms[d - 1] = g;
  }

  SectionForm form(a, std::move(forms));
  if (options.verify) {
    const SectionDecomposition dec = analyze_section_form(form);
    if (dec.scroll_part != b || dec.multiplicities != m || dec.gcd_degree != c)
      throw Error(Errc::Internal, "constructed reducible form decomposes differently");
  }
  return form;
}

SectionDecomposition analyze_section_form(const SectionForm& form) {
  require_nonzero(form);
  SectionDecomposition out;
  BinaryForm g = gcd_of_forms(form.forms());
  out.gcd_degree = g.degree();
  if (g.degree() > 0) out.multiplicities = squarefree_multiplicities(g);
  out.scroll_part = syzygy_degrees(form);
  out.common_factor = std::move(g);
  if (out.scroll_part.degree() + out.gcd_degree != form.scroll().degree())
    throw Error(Errc::Internal, "syzygy degrees violate the degree sum identity");
  return out;
}

bool is_prime_section(const SectionForm& form) {
  require_nonzero(form);
  return gcd_of_forms(form.forms()).degree() == 0;
}

}  // namespace scrolls
