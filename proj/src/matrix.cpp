#include "semicomm/matrix.hpp"

#include <string>

namespace semicomm {

QMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = r == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  QMatrix m = QMatrix::Zero(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Index>(row.size()) != c)
      throw ShapeError("make_matrix: ragged rows");
    Index j = 0;
    for (long v : row) m(i, j++) = Rational(v);
    ++i;
  }
  return m;
}

bool exactly_equal(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

bool is_zero_matrix(const QMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_square(const QMatrix& m) { return m.rows() == m.cols(); }

bool is_upper_triangular(const QMatrix& m) {
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < i && j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

bool is_idempotent(const QMatrix& m) {
  return is_square(m) && exactly_equal(mat_mul(m, m), m);
}

void require_square(const QMatrix& m, const char* what) {
  if (!is_square(m))
    throw ShapeError(std::string(what) + ": matrix must be square, got " +
                     std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void require_same_square(const QMatrix& a, const QMatrix& b, const char* what) {
  require_square(a, what);
  require_square(b, what);
  if (a.rows() != b.rows())
    throw ShapeError(std::string(what) + ": size mismatch " + std::to_string(a.rows()) +
                     " vs " + std::to_string(b.rows()));
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows())
    throw ShapeError("mat_mul: inner dimensions " + std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()));
  return a * b;
}

QMatrix commutator(const QMatrix& a, const QMatrix& b) {
  require_same_square(a, b, "commutator");
  return a * b - b * a;
}

QMatrix mat_pow(const QMatrix& m, unsigned long k) {
  require_square(m, "mat_pow");
  QMatrix result = identity(m.rows());
  QMatrix base = m;
  while (k > 0) {
    if (k & 1UL) result = result * base;
    k >>= 1UL;
    if (k > 0) base = base * base;
  }
  return result;
}

bool is_nilpotent(const QMatrix& m) {
  require_square(m, "is_nilpotent");
  const Index n = m.rows();
  // m nilpotent iff m^n = 0; square up to the first power >= n.
  QMatrix p = m;
  Index covered = 1;
  while (covered < n) {
    p = p * p;
    covered *= 2;
  }
  return is_zero_matrix(p);
}

QMatrix vectorize(const QMatrix& m) {
  QMatrix v(1, m.rows() * m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v(0, i * m.cols() + j) = m(i, j);
  return v;
}

QMatrix inverse(const QMatrix& m) {
  require_square(m, "inverse");
  const Index n = m.rows();
  QMatrix work = m;
  QMatrix inv = identity(n);
  for (Index col = 0; col < n; ++col) {
    Index pivot = -1;
    for (Index r = col; r < n; ++r)
      if (!work(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw DomainError("inverse: matrix is singular");
    if (pivot != col) {
      work.row(pivot).swap(work.row(col));
      inv.row(pivot).swap(inv.row(col));
    }
    const Rational scale = Rational(1) / work(col, col);
    for (Index j = 0; j < n; ++j) {
      work(col, j) = work(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (Index r = 0; r < n; ++r) {
      if (r == col || work(r, col).is_zero()) continue;
      const Rational factor = work(r, col);
      for (Index j = 0; j < n; ++j) {
        work(r, j) = work(r, j) - factor * work(col, j);
        inv(r, j) = inv(r, j) - factor * inv(col, j);
      }
    }
  }
  return inv;
}

bool MatrixLess::operator()(const QMatrix& a, const QMatrix& b) const {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) < b(i, j)) return true;
      if (b(i, j) < a(i, j)) return false;
    }
  return false;
}

}  // namespace semicomm
