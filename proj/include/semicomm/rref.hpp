#pragma once

#include <vector>

#include "semicomm/matrix.hpp"

namespace semicomm {

struct RrefResult {
  QMatrix reduced;
  Index rank = 0;
  std::vector<Index> pivot_cols;  // 0-based, strictly increasing
};

/// Reduced row-echelon form over the rationals. Deterministic: pivots are
/// chosen as the first nonzero entry in the leftmost unsettled column, with
/// exact division and no tolerances.
RrefResult rref(const QMatrix& m);

/// Incrementally maintained row space in canonical RREF form. Rows are kept
/// sorted by pivot column, pivoted at 1 and fully reduced, so two RowSpans
/// describe the same subspace iff their rows are identical.
class RowSpan {
 public:
  explicit RowSpan(Index width) : width_(width) {}

  /// Reduces `row_vec` (1 x width) against the span; inserts the residual and
  /// returns true iff the rank grew.
  bool insert(const QMatrix& row_vec);

  bool contains(const QMatrix& row_vec) const;
  Index rank() const { return static_cast<Index>(rows_.size()); }
  Index width() const { return width_; }
  const std::vector<QMatrix>& rows() const { return rows_; }
  const std::vector<Index>& pivot_cols() const { return pivots_; }

  /// Stacks the reduced rows into a rank x width matrix.
  QMatrix as_matrix() const;

  friend bool operator==(const RowSpan& a, const RowSpan& b);

 private:
  QMatrix reduce(QMatrix row) const;

  Index width_;
  std::vector<QMatrix> rows_;   // each 1 x width, RREF invariant
  std::vector<Index> pivots_;   // pivot column of rows_[k]
};

}  // namespace semicomm
