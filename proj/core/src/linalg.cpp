#include "linalg.hpp"

namespace scrolls::detail {

std::vector<Vec> nullspace(const PrimeField& F, DenseMatrix m) {
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t sel = row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != row)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(row, j));
    const auto inv = F.inv(m.at(row, col));
    for (std::size_t j = col; j < m.cols; ++j) m.at(row, j) = F.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row) continue;
      const auto factor = m.at(i, col);
      if (factor == 0) continue;
      for (std::size_t j = col; j < m.cols; ++j)
        m.at(i, j) = F.sub(m.at(i, j), F.mul(factor, m.at(row, j)));
    }
    pivot_cols.push_back(col);
    ++row;
  }

  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) v[pivot_cols[r]] = F.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

bool EchelonBasis::insert(Vec v) {
  for (std::size_t col = 0; col < v.size(); ++col) {
    if (v[col] == 0) continue;
    const std::size_t r = pivot_row_[col];
    if (r == npos) {
      const auto inv = F_.inv(v[col]);
      for (std::size_t j = col; j < v.size(); ++j) v[j] = F_.mul(v[j], inv);
      pivot_row_[col] = rows_.size();
      pivot_col_.push_back(col);
      rows_.push_back(std::move(v));
      return true;
    }
    const auto factor = v[col];
    const Vec& pr = rows_[r];
    for (std::size_t j = col; j < v.size(); ++j)
      if (pr[j]) v[j] = F_.sub(v[j], F_.mul(factor, pr[j]));
  }
  return false;
}

}  // namespace scrolls::detail
