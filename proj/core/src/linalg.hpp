#ifndef SCROLLS_SRC_LINALG_HPP
#define SCROLLS_SRC_LINALG_HPP

// Dense linear algebra over F_p for the graded pieces of the syzygy module.

#include <cstddef>
#include <vector>

#include "scrolls/field.hpp"

namespace scrolls::detail {

using Vec = std::vector<PrimeField::Elem>;

/// Row-major dense matrix.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  Vec data;

  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  PrimeField::Elem& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  PrimeField::Elem at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// Basis of { v : M v = 0 }, one vector per free column of the reduced
/// row echelon form.
std::vector<Vec> nullspace(const PrimeField& F, DenseMatrix m);

/// Incrementally maintained echelon basis; insert() reports whether the
/// vector was independent of everything inserted so far.
class EchelonBasis {
public:
  EchelonBasis(const PrimeField& F, std::size_t dim) : F_(F), pivot_row_(dim, npos) {}

  bool insert(Vec v);
  std::size_t rank() const noexcept { return rows_.size(); }

private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  const PrimeField& F_;
  std::vector<Vec> rows_;               // each normalized to pivot 1
  std::vector<std::size_t> pivot_row_;  // column -> index into rows_
  std::vector<std::size_t> pivot_col_;  // row index -> column
};

}  // namespace scrolls::detail

#endif  // SCROLLS_SRC_LINALG_HPP
