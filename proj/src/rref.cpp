#include "semicomm/rref.hpp"

#include <algorithm>

namespace semicomm {

RrefResult rref(const QMatrix& m) {
  RrefResult res;
  res.reduced = m;
  QMatrix& a = res.reduced;
  const Index rows = a.rows(), cols = a.cols();
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index pivot = -1;
    for (Index i = r; i < rows; ++i)
      if (!a(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) a.row(pivot).swap(a.row(r));
    const Rational inv = Rational(1) / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) = a(r, j) * inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) = a(i, j) - f * a(r, j);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

QMatrix RowSpan::reduce(QMatrix row) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational& coeff = row(0, pivots_[k]);
    if (coeff.is_zero()) continue;
    const Rational f = coeff;  // pivot entry of rows_[k] is 1
    for (Index j = pivots_[k]; j < width_; ++j)
      row(0, j) = row(0, j) - f * rows_[k](0, j);
  }
  return row;
}

bool RowSpan::contains(const QMatrix& row_vec) const {
  return is_zero_matrix(reduce(row_vec));
}

bool RowSpan::insert(const QMatrix& row_vec) {
  QMatrix residual = reduce(row_vec);
  Index pivot = -1;
  for (Index j = 0; j < width_; ++j)
    if (!residual(0, j).is_zero()) {
      pivot = j;
      break;
    }
  if (pivot < 0) return false;
  const Rational inv = Rational(1) / residual(0, pivot);
  for (Index j = pivot; j < width_; ++j) residual(0, j) = residual(0, j) * inv;
  // Eliminate the new pivot column from existing rows, then insert in order.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Rational f = rows_[k](0, pivot);
    if (f.is_zero()) continue;
    for (Index j = pivot; j < width_; ++j)
      rows_[k](0, j) = rows_[k](0, j) - f * residual(0, j);
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), pivot);
  const std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(residual));
  return true;
}

QMatrix RowSpan::as_matrix() const {
  QMatrix out = QMatrix::Zero(rank(), width_);
  for (std::size_t k = 0; k < rows_.size(); ++k) out.row(static_cast<Index>(k)) = rows_[k].row(0);
  return out;
}

bool operator==(const RowSpan& a, const RowSpan& b) {
  if (a.width_ != b.width_ || a.rows_.size() != b.rows_.size()) return false;
  if (a.pivots_ != b.pivots_) return false;
  for (std::size_t k = 0; k < a.rows_.size(); ++k)
    if (!exactly_equal(a.rows_[k], b.rows_[k])) return false;
  return true;
}

}  // namespace semicomm
