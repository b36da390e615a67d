#include "ginvkit/linalg.hpp"

#include <Eigen/SVD>
#include <limits>

namespace ginvkit {

SvdFactors svd(const Matrix& A) {
  require_nonempty(A, "svd");
  require_finite(A, "svd");
  Eigen::JacobiSVD<Matrix> dec(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdFactors{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

double rank_tolerance(Index rows, Index cols, double sigma_max) {
  return static_cast<double>(std::max(rows, cols)) *
         std::numeric_limits<double>::epsilon() * sigma_max;
}

namespace {

void require_full_rank(const Matrix& A, const Vector& sv, const char* what) {
  const double tol = rank_tolerance(A.rows(), A.cols(), sv(0));
  if (sv(sv.size() - 1) <= tol) {
    throw RankDeficientError(std::string(what) + ": matrix is rank deficient (sigma_min=" +
                             std::to_string(sv(sv.size() - 1)) + ", tol=" +
                             std::to_string(tol) + ")");
  }
}

}  // namespace

Matrix mpp(const Matrix& A) {
  const SvdFactors f = svd(A);
  require_full_rank(A, f.singular_values, "mpp");
  const Index k = f.singular_values.size();
  return f.V.leftCols(k) * f.singular_values.cwiseInverse().asDiagonal() *
         f.U.leftCols(k).transpose();
}

bool is_generalized_inverse(const Matrix& A, const Matrix& X, double tol) {
  require_finite(A, "is_generalized_inverse");
  require_finite(X, "is_generalized_inverse");
  if (X.rows() != A.cols() || X.cols() != A.rows()) {
    throw ShapeError("is_generalized_inverse: X must be n x m for A of shape m x n");
  }
  const Matrix residual = A * X - Matrix::Identity(A.rows(), A.rows());
  return residual.norm() <= tol;
}

AffineGinvSet affine_ginv_set(const Matrix& A) {
  require_nonempty(A, "affine_ginv_set");
  require_finite(A, "affine_ginv_set");
  if (A.rows() >= A.cols()) {
    throw ShapeError("affine_ginv_set: requires a fat matrix (m < n)");
  }
  const SvdFactors f = svd(A);
  require_full_rank(A, f.singular_values, "affine_ginv_set");
  const Index m = A.rows();
  const Index n = A.cols();
  AffineGinvSet set;
  set.mpp = f.V.leftCols(m) * f.singular_values.cwiseInverse().asDiagonal() *
            f.U.transpose();
  set.nullbasis = f.V.rightCols(n - m);
  return set;
}

Matrix parametrized_inverse(const AffineGinvSet& set, const Matrix& Z) {
  if (Z.rows() != set.nullbasis.cols() || Z.cols() != set.mpp.cols()) {
    throw ShapeError("parametrized_inverse: Z must be (n-m) x m");
  }
  require_finite(Z, "parametrized_inverse");
  return set.mpp + set.nullbasis * Z;
}

}  // namespace ginvkit
