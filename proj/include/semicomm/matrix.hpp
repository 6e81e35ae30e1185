#pragma once

#include <Eigen/Core>

#include <initializer_list>
#include <vector>

#include "semicomm/errors.hpp"
#include "semicomm/rational.hpp"

namespace semicomm {

/// Dense matrix over an arbitrary scalar; QMatrix is the exact-rational
/// instantiation used everywhere in this project.
template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using QMatrix = DenseMatrix<Rational>;
using Index = Eigen::Index;

/// Builds a matrix from integer rows; test and construction convenience.
QMatrix make_matrix(std::initializer_list<std::initializer_list<long>> rows);

inline QMatrix identity(Index n) { return QMatrix::Identity(n, n); }
inline QMatrix zeros(Index rows, Index cols) { return QMatrix::Zero(rows, cols); }

bool exactly_equal(const QMatrix& a, const QMatrix& b);
bool is_zero_matrix(const QMatrix& m);
bool is_square(const QMatrix& m);
bool is_upper_triangular(const QMatrix& m);
bool is_idempotent(const QMatrix& m);

void require_square(const QMatrix& m, const char* what);
void require_same_square(const QMatrix& a, const QMatrix& b, const char* what);

/// Exact product; throws ShapeError when a.cols() != b.rows().
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);

/// ab - ba for square matrices of equal size.
QMatrix commutator(const QMatrix& a, const QMatrix& b);

/// m^k for k >= 0 by repeated squaring (m square).
QMatrix mat_pow(const QMatrix& m, unsigned long k);

/// True iff m^n = 0 where n = size; evaluated exactly via repeated squaring.
bool is_nilpotent(const QMatrix& m);

/// Row-major flattening into a 1 x (rows*cols) row vector.
QMatrix vectorize(const QMatrix& m);

/// Exact inverse by Gauss-Jordan elimination; throws DomainError if singular.
QMatrix inverse(const QMatrix& m);

/// Total order on matrices: by shape, then row-major entries. Used for
/// deterministic dedup containers.
struct MatrixLess {
  bool operator()(const QMatrix& a, const QMatrix& b) const;
};

}  // namespace semicomm
