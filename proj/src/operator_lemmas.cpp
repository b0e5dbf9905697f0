#include "nrad/operator_lemmas.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

void check_dim(const ComplexMatrix& t, const ComplexVector& x) {
  if (t.rows() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix and vector dimensions differ");
}

void check_r(double r) {
  if (!(r >= 1.0) || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "r must be finite and >= 1");
}

double apply(ConvexFunction h, double s) {
  switch (h) {
    case ConvexFunction::Square: return s * s;
    case ConvexFunction::Abs: return std::abs(s);
    case ConvexFunction::Quartic: return s * s * s * s;
    case ConvexFunction::Exp: return std::exp(s);
  }
  return s;
}

std::string_view name_of(ConvexFunction h) {
  switch (h) {
    case ConvexFunction::Square: return "square";
    case ConvexFunction::Abs: return "abs";
    case ConvexFunction::Quartic: return "quartic";
    case ConvexFunction::Exp: return "exp";
  }
  return "?";
}

}  // namespace

InequalityRecord mccarthy_check(const ComplexMatrix& t, const ComplexVector& x, double r) {
  check_square(t);
  check_unit(x);
  check_dim(t, x);
  check_r(r);
  const ComplexMatrix tr = matrix_power_psd(t, r);  // rejects non-PSD input
  const double quad = std::max(x.dot(t * x).real(), 0.0);
  return make_record("mccarthy", std::pow(quad, r), x.dot(tr * x).real());
}

InequalityRecord convex_norm_check(const ComplexMatrix& a, const ComplexMatrix& b, double r) {
  check_square(a);
  check_square(b);
  check_same_dim(a, b);
  check_r(r);
  const ComplexMatrix ar = matrix_power_psd(a, r);
  const ComplexMatrix br = matrix_power_psd(b, r);
  const double lhs = operator_norm(matrix_power_psd((a + b) * 0.5, r));
  return make_record("convex_norm", lhs, operator_norm((ar + br) * 0.5));
}

InequalityRecord mixed_schwarz_check(const ComplexMatrix& t, const ComplexVector& x, const ComplexVector& y,
                                     double alpha) {
  check_square(t);
  check_vector(x);
  check_vector(y);
  check_dim(t, x);
  check_dim(t, y);
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
  const AbsoluteSpectrum spec(t);
  const double lhs = std::abs(inner(t * x, y));
  const double rhs = (spec.abs_power(alpha) * x).norm() * (spec.adjoint_abs_power(1.0 - alpha) * y).norm();
  return make_record("mixed_schwarz", lhs, rhs);
}

ConvexFunction convex_function_from_name(std::string_view name) {
  if (name == "square") return ConvexFunction::Square;
  if (name == "abs") return ConvexFunction::Abs;
  if (name == "quartic") return ConvexFunction::Quartic;
  if (name == "exp") return ConvexFunction::Exp;
  throw Error(ErrorCode::UnknownFunction, "no convex function named '" + std::string(name) + "'");
}

InequalityRecord jensen_operator_check(const ComplexMatrix& t, const ComplexVector& x, ConvexFunction h) {
  check_square(t);
  check_unit(x);
  check_dim(t, x);
  const EigenDecomposition eig = hermitian_eigen(t);  // rejects non-Hermitian input
  RealVector mapped(eig.eigenvalues.size());
  for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = apply(h, eig.eigenvalues(i));
  // ⟨h(T)x,x⟩ = Σ h(λ_i)|⟨x, v_i⟩|².
  const RealVector weights = (eig.eigenvectors.adjoint() * x).cwiseAbs2();
  const double rhs = mapped.dot(weights);
  const double lhs = apply(h, x.dot(t * x).real());
  return make_record("jensen_" + std::string(name_of(h)), lhs, rhs);
}

InequalityRecord jensen_operator_check(const ComplexMatrix& t, const ComplexVector& x, std::string_view h_id) {
  return jensen_operator_check(t, x, convex_function_from_name(h_id));
}

}  // namespace nrad
