#pragma once

#include "ginvkit/matrix.hpp"

namespace ginvkit {

/// Full singular value decomposition A = U * diag(s) * V^T with U (m x m)
/// and V (n x n) orthogonal and s non-increasing of length min(m, n).
struct SvdFactors {
  Matrix U;
  Vector singular_values;
  Matrix V;
};

SvdFactors svd(const Matrix& A);

/// max(m, n) * eps * sigma_max, the smallest singular value treated as nonzero.
double rank_tolerance(Index rows, Index cols, double sigma_max);

/// Moore-Penrose pseudoinverse of a full-rank matrix (any shape).
/// Throws RankDeficientError when the smallest singular value is below
/// the rank tolerance.
Matrix mpp(const Matrix& A);

/// True iff ||A X - I_m||_F <= tol.
bool is_generalized_inverse(const Matrix& A, const Matrix& X, double tol);

/// Affine parametrization of the generalized inverses of a fat full-rank A:
/// every X with A X = I is mpp + nullbasis * Z. The nullbasis columns are
/// the trailing right singular vectors, an orthonormal basis of ker(A).
struct AffineGinvSet {
  Matrix mpp;        // n x m
  Matrix nullbasis;  // n x (n - m), orthonormal columns
};

/// Requires m < n and full row rank; throws ShapeError otherwise.
AffineGinvSet affine_ginv_set(const Matrix& A);

/// set.mpp + set.nullbasis * Z for Z of shape (n - m) x m.
Matrix parametrized_inverse(const AffineGinvSet& set, const Matrix& Z);

}  // namespace ginvkit
