#pragma once

#include <string>

#include "ginvkit/matrix.hpp"

namespace ginvkit {

enum class NormFamily {
  entrywise,       // lp norm of vec(M)
  columnwise,      // lq norm of the column lp norms
  rowwise,         // lq norm of the row lp norms
  schatten,        // lp norm of the singular values
  induced_1_to_q,  // operator norm l1 -> lq  (= columnwise (q, inf))
  induced_p_to_inf,// operator norm lp -> linf (= rowwise (p*, inf))
  spectral,        // largest singular value  (= schatten inf)
};

/// Descriptor of a matrix norm. Exponents live in (0, inf]; quasi-norm
/// exponents (< 1) are accepted for evaluation but are not convex-valid,
/// so solvers reject them.
struct NormSpec {
  NormFamily family = NormFamily::entrywise;
  double p = 2.0;
  double q = 2.0;  // ignored by one-exponent families

  static NormSpec entrywise(double p);
  static NormSpec columnwise(double p, double q);
  static NormSpec rowwise(double p, double q);
  static NormSpec schatten(double p);
  static NormSpec induced_1_to_q(double q);
  static NormSpec induced_p_to_inf(double p);
  static NormSpec spectral();

  /// True iff evaluation is a genuine norm usable by the convex solvers.
  bool convex_valid() const;

  /// Canonical string form: entrywise:p, col:p,q, row:p,q, schatten:p,
  /// ind1q:q, indpinf:p, spectral. "inf" denotes infinity.
  std::string to_string() const;
  static NormSpec parse(const std::string& text);
};

bool operator==(const NormSpec& a, const NormSpec& b);

constexpr double kInf = std::numeric_limits<double>::infinity();

/// Hoelder conjugate: 1/p + 1/p* = 1 (1 <-> inf).
double conjugate_exponent(double p);

double entrywise_norm(const Matrix& M, double p);
double columnwise_mixed(const Matrix& M, double p, double q);
double rowwise_mixed(const Matrix& M, double p, double q);
double schatten_norm(const Matrix& M, double p);
double induced_1_to_q_norm(const Matrix& M, double q);
double induced_p_to_inf_norm(const Matrix& M, double p);
double spectral_norm(const Matrix& M);

/// Dispatch on a NormSpec.
double matrix_norm(const Matrix& M, const NormSpec& spec);

/// Descriptor of the dual norm. Throws UnsupportedNormError for quasi-norm
/// input (no dual exists).
NormSpec dual_spec(const NormSpec& spec);

/// Number of entries with |m_ij| > threshold. The counting "norm" is
/// exposed as this census only, never as a NormSpec.
Index nonzero_count(const Matrix& M, double threshold);

}  // namespace ginvkit
