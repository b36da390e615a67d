#pragma once

#include <Eigen/Dense>

#include "ginvkit/errors.hpp"

namespace ginvkit {

// Dense real matrices are the universal currency of the library.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

using Index = Eigen::Index;

inline bool all_finite(const Matrix& M) { return M.allFinite(); }

/// Throws InvalidInputError if the argument contains NaN or Inf.
inline void require_finite(const Matrix& M, const char* what) {
  if (!M.allFinite()) {
    throw InvalidInputError(std::string(what) + ": non-finite entries");
  }
}

inline void require_nonempty(const Matrix& M, const char* what) {
  if (M.rows() < 1 || M.cols() < 1) {
    throw ShapeError(std::string(what) + ": empty matrix");
  }
}

}  // namespace ginvkit
