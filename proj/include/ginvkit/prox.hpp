#pragma once

#include <optional>
#include <string>

#include "ginvkit/linalg.hpp"
#include "ginvkit/norms.hpp"

namespace ginvkit {

/// Step sizes shared by the splitting solvers. When mu is present the
/// linearized update requires 0 < mu <= lambda / spectral(A)^2.
struct ProxStep {
  double lambda = 1.0;
  std::optional<double> mu;
};

/// Soft thresholding: sign(v) .* max(|v| - lambda, 0).
Vector prox_vec_l1(const Vector& v, double lambda);

/// Block shrinkage: max(1 - lambda/||v||_2, 0) * v.
Vector prox_vec_l2(const Vector& v, double lambda);

/// Euclidean projection onto { ||z||_1 <= radius }. Exact, expected linear
/// time via pivot partitioning.
Vector project_l1_ball(const Vector& v, double radius);

/// prox of lambda*||.||_inf via the Moreau decomposition
/// prox_{lambda f}(v) = v - proj_{lambda B_{f*}}(v) with f* ball = l1 ball.
Vector prox_vec_linf(const Vector& v, double lambda);

/// Euclidean projection onto { sum_j ||z_j||_inf <= radius } (ball of the
/// columnwise (inf,1) mixed norm). O(mn log m) after presorting.
Matrix project_colinf1_ball(const Matrix& M, double radius);

/// Same ball on rows.
Matrix project_rowinf1_ball(const Matrix& M, double radius);

/// Euclidean projection onto { sum_j ||z_j||_2 <= radius } (columnwise (2,1)
/// group ball): project the vector of column norms onto the l1 ball and
/// rescale columns.
Matrix project_col21_ball(const Matrix& M, double radius);

Matrix project_row21_ball(const Matrix& M, double radius);

/// Projection onto the entrywise l1 ball of a matrix (vectorized).
Matrix project_entrywise_l1_ball(const Matrix& M, double radius);

/// True iff prox_matrix supports (spec, exponent).
bool prox_supported(const NormSpec& spec, double exponent);

/// Human-readable list of the supported (spec, exponent) combinations.
std::string supported_prox_combinations();

/// argmin_X  0.5*||M - X||_F^2 + lambda * norm(X)^exponent
///
/// Supported combinations:
///   entrywise:1 / entrywise:2, exponent 1; entrywise:2, exponent 2
///   col:p,q and row:p,q with exponent q for (p,q) in
///     {(1,1), (2,1), (inf,1), (2,2)}
///   col:p,inf (= ind1q:p) and row:p,inf (= indpinf:p*), exponent 1,
///     for p in {1, 2, inf}  (Moreau + dual (.,1)-ball projection)
///   schatten:1, exponent 1 (singular value soft thresholding)
/// Anything else throws UnsupportedProxError listing the table.
Matrix prox_matrix(const Matrix& M, const NormSpec& spec, double exponent, double lambda);

/// Euclidean projection onto the affine set of generalized inverses:
/// set.mpp + N N^T V. Idempotent; output satisfies A X = I to rounding.
Matrix project_affine_ginv(const Matrix& V, const AffineGinvSet& set);

}  // namespace ginvkit
