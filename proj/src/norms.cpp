#include "ginvkit/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ginvkit/linalg.hpp"

namespace ginvkit {

namespace {

void require_exponent(double p, const char* name) {
  if (std::isnan(p) || p <= 0.0) {
    throw UnsupportedNormError(std::string(name) + " must lie in (0, inf]");
  }
}

/// lp norm of the |entries| already collected in `a`, with overflow guard.
double lp_of_abs(const Vector& a, double p) {
  if (a.size() == 0) return 0.0;
  const double amax = a.maxCoeff();
  if (amax == 0.0) return 0.0;
  if (std::isinf(p)) return amax;
  if (p == 1.0) return a.sum();
  if (p == 2.0) return a.norm();
  double acc = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    acc += std::pow(a(i) / amax, p);
  }
  return amax * std::pow(acc, 1.0 / p);
}

std::string format_exponent(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os.precision(15);
  os << p;
  return os.str();
}

double parse_exponent(const std::string& tok, const std::string& text) {
  if (tok == "inf") return kInf;
  try {
    std::size_t used = 0;
    const double v = std::stod(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw UnsupportedNormError("bad exponent '" + tok + "' in norm spec '" + text + "'");
  }
}

}  // namespace

NormSpec NormSpec::entrywise(double p) {
  require_exponent(p, "entrywise p");
  return NormSpec{NormFamily::entrywise, p, p};
}

NormSpec NormSpec::columnwise(double p, double q) {
  require_exponent(p, "columnwise p");
  require_exponent(q, "columnwise q");
  return NormSpec{NormFamily::columnwise, p, q};
}

NormSpec NormSpec::rowwise(double p, double q) {
  require_exponent(p, "rowwise p");
  require_exponent(q, "rowwise q");
  return NormSpec{NormFamily::rowwise, p, q};
}

NormSpec NormSpec::schatten(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw UnsupportedNormError("schatten requires p >= 1");
  }
  return NormSpec{NormFamily::schatten, p, p};
}

NormSpec NormSpec::induced_1_to_q(double q) {
  require_exponent(q, "induced 1->q exponent");
  return NormSpec{NormFamily::induced_1_to_q, 1.0, q};
}

NormSpec NormSpec::induced_p_to_inf(double p) {
  if (std::isnan(p) || p < 1.0) {
    throw UnsupportedNormError("induced p->inf requires p >= 1");
  }
  return NormSpec{NormFamily::induced_p_to_inf, p, kInf};
}

NormSpec NormSpec::spectral() { return NormSpec{NormFamily::spectral, kInf, kInf}; }

bool NormSpec::convex_valid() const {
  switch (family) {
    case NormFamily::entrywise:
      return p >= 1.0;
    case NormFamily::columnwise:
    case NormFamily::rowwise:
      return p >= 1.0 && q >= 1.0;
    case NormFamily::schatten:
      return p >= 1.0;
    case NormFamily::induced_1_to_q:
      return q >= 1.0;
    case NormFamily::induced_p_to_inf:
      return p >= 1.0;
    case NormFamily::spectral:
      return true;
  }
  return false;
}

std::string NormSpec::to_string() const {
  switch (family) {
    case NormFamily::entrywise:
      return "entrywise:" + format_exponent(p);
    case NormFamily::columnwise:
      return "col:" + format_exponent(p) + "," + format_exponent(q);
    case NormFamily::rowwise:
      return "row:" + format_exponent(p) + "," + format_exponent(q);
    case NormFamily::schatten:
      return "schatten:" + format_exponent(p);
    case NormFamily::induced_1_to_q:
      return "ind1q:" + format_exponent(q);
    case NormFamily::induced_p_to_inf:
      return "indpinf:" + format_exponent(p);
    case NormFamily::spectral:
      return "spectral";
  }
  return "?";
}

NormSpec NormSpec::parse(const std::string& text) {
  if (text == "spectral") return spectral();
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw UnsupportedNormError(
        "bad norm spec '" + text +
        "'; expected entrywise:p, col:p,q, row:p,q, schatten:p, ind1q:q, indpinf:p or "
        "spectral ('inf' denotes infinity)");
  }
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  const auto comma = tail.find(',');
  if (head == "entrywise" || head == "schatten" || head == "ind1q" || head == "indpinf") {
    if (comma != std::string::npos) {
      throw UnsupportedNormError("norm family '" + head + "' takes a single exponent");
    }
    const double v = parse_exponent(tail, text);
    if (head == "entrywise") return entrywise(v);
    if (head == "schatten") return schatten(v);
    if (head == "ind1q") return induced_1_to_q(v);
    return induced_p_to_inf(v);
  }
  if (head == "col" || head == "row") {
    if (comma == std::string::npos) {
      throw UnsupportedNormError("norm family '" + head + "' needs two exponents p,q");
    }
    const double pv = parse_exponent(tail.substr(0, comma), text);
    const double qv = parse_exponent(tail.substr(comma + 1), text);
    return head == "col" ? columnwise(pv, qv) : rowwise(pv, qv);
  }
  throw UnsupportedNormError("unknown norm family '" + head + "' in '" + text + "'");
}

bool operator==(const NormSpec& a, const NormSpec& b) {
  return a.family == b.family && a.p == b.p && a.q == b.q;
}

double conjugate_exponent(double p) {
  if (p == 1.0) return kInf;
  if (std::isinf(p)) return 1.0;
  return p / (p - 1.0);
}

double entrywise_norm(const Matrix& M, double p) {
  require_exponent(p, "entrywise p");
  require_finite(M, "entrywise_norm");
  const Vector a = M.reshaped().cwiseAbs();
  return lp_of_abs(a, p);
}

double columnwise_mixed(const Matrix& M, double p, double q) {
  require_exponent(p, "columnwise p");
  require_exponent(q, "columnwise q");
  require_finite(M, "columnwise_mixed");
  Vector colnorms(M.cols());
  for (Index j = 0; j < M.cols(); ++j) {
    colnorms(j) = lp_of_abs(M.col(j).cwiseAbs(), p);
  }
  return lp_of_abs(colnorms, q);
}

double rowwise_mixed(const Matrix& M, double p, double q) {
  return columnwise_mixed(M.transpose(), p, q);
}

double schatten_norm(const Matrix& M, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw UnsupportedNormError("schatten requires p >= 1");
  }
  require_finite(M, "schatten_norm");
  const SvdFactors f = svd(M);
  return lp_of_abs(f.singular_values, p);
}

double induced_1_to_q_norm(const Matrix& M, double q) {
  return columnwise_mixed(M, q, kInf);
}

double induced_p_to_inf_norm(const Matrix& M, double p) {
  if (std::isnan(p) || p < 1.0) {
    throw UnsupportedNormError("induced p->inf requires p >= 1");
  }
  return rowwise_mixed(M, conjugate_exponent(p), kInf);
}

double spectral_norm(const Matrix& M) { return schatten_norm(M, kInf); }

double matrix_norm(const Matrix& M, const NormSpec& spec) {
  switch (spec.family) {
    case NormFamily::entrywise:
      return entrywise_norm(M, spec.p);
    case NormFamily::columnwise:
      return columnwise_mixed(M, spec.p, spec.q);
    case NormFamily::rowwise:
      return rowwise_mixed(M, spec.p, spec.q);
    case NormFamily::schatten:
      return schatten_norm(M, spec.p);
    case NormFamily::induced_1_to_q:
      return induced_1_to_q_norm(M, spec.q);
    case NormFamily::induced_p_to_inf:
      return induced_p_to_inf_norm(M, spec.p);
    case NormFamily::spectral:
      return spectral_norm(M);
  }
  throw UnsupportedNormError("unknown norm family");
}

NormSpec dual_spec(const NormSpec& spec) {
  if (!spec.convex_valid()) {
    throw UnsupportedNormError("quasi-norm " + spec.to_string() + " has no dual norm");
  }
  switch (spec.family) {
    case NormFamily::entrywise:
      return NormSpec::entrywise(conjugate_exponent(spec.p));
    case NormFamily::columnwise:
      return NormSpec::columnwise(conjugate_exponent(spec.p), conjugate_exponent(spec.q));
    case NormFamily::rowwise:
      return NormSpec::rowwise(conjugate_exponent(spec.p), conjugate_exponent(spec.q));
    case NormFamily::schatten:
      return NormSpec::schatten(conjugate_exponent(spec.p));
    case NormFamily::induced_1_to_q:
      // (l1 -> lq)* = columnwise (q*, 1)
      return NormSpec::columnwise(conjugate_exponent(spec.q), 1.0);
    case NormFamily::induced_p_to_inf:
      // (lp -> linf)* = rowwise (p, 1)
      return NormSpec::rowwise(spec.p, 1.0);
    case NormFamily::spectral:
      return NormSpec::schatten(1.0);
  }
  throw UnsupportedNormError("unknown norm family");
}

Index nonzero_count(const Matrix& M, double threshold) {
  require_finite(M, "nonzero_count");
  return (M.cwiseAbs().array() > threshold).count();
}

}  // namespace ginvkit
