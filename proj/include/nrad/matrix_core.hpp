#pragma once

// Dense complex matrix algebra and the numerical-radius engine.

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace nrad {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Full spectral decomposition of a Hermitian matrix. Eigenvalues ascend and
/// the eigenvectors are the (unitary) columns of `eigenvectors`.
struct EigenDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Default θ-width at which the numerical-radius refinement stops.
inline constexpr double kRadiusTolerance = 1e-10;

/// Number of angles in the coarse θ sweep (must be even).
inline constexpr int kRadiusGridSize = 720;

// Validation helpers. Each throws nrad::Error on failure.
void check_square(const ComplexMatrix& m);
void check_vector(const ComplexVector& v);
void check_same_dim(const ComplexMatrix& a, const ComplexMatrix& b);
void check_unit(const ComplexVector& v, double tol = 1e-12);

/// ⟨x, y⟩, linear in the first argument.
Complex inner(const ComplexVector& x, const ComplexVector& y);

ComplexMatrix identity(Eigen::Index dim);
ComplexMatrix shift_matrix(Eigen::Index dim);

ComplexMatrix adjoint(const ComplexMatrix& m);

/// Relative Hermitian defect ‖M − M*‖_F / max(1, ‖M‖_F).
double hermitian_defect(const ComplexMatrix& m);

EigenDecomposition hermitian_eigen(const ComplexMatrix& m);

/// Spectral mapping λ ↦ λ^p for a positive semidefinite matrix. Eigenvalues
/// in [−1e-8·‖A‖, 0) are treated as roundoff and clamped to zero; p = 0 maps
/// every eigenvalue (clamped zeros included) to 1.
ComplexMatrix matrix_power_psd(const ComplexMatrix& a, double p);

/// |M| = (M*M)^{1/2}.
ComplexMatrix abs_value(const ComplexMatrix& m);

/// Largest singular value.
double operator_norm(const ComplexMatrix& m);

/// w(M) = max_θ λ_max((e^{iθ}M + e^{−iθ}M*)/2), found by a uniform θ sweep
/// followed by golden-section refinement around each local maximum.
double numerical_radius(const ComplexMatrix& m, double tol = kRadiusTolerance);

/// Independent lower estimate of w(M): best |⟨Mx, x⟩| over `samples` random
/// unit starts, each polished by at most 100 projected-gradient steps.
double numerical_radius_oracle(const ComplexMatrix& m, int samples, std::uint64_t seed);

/// Powers of |T| and |T*| from a single SVD T = UΣV*:
/// |T|^p = VΣ^pV*, |T*|^p = UΣ^pU*.
class AbsoluteSpectrum {
 public:
  explicit AbsoluteSpectrum(const ComplexMatrix& t);

  ComplexMatrix abs_power(double p) const;
  ComplexMatrix adjoint_abs_power(double p) const;
  const RealVector& singular_values() const { return sigma_; }

 private:
  static ComplexMatrix apply(const ComplexMatrix& basis, const RealVector& sigma, double p);

  RealVector sigma_;
  ComplexMatrix u_;
  ComplexMatrix v_;
};

}  // namespace nrad
