#include <gtest/gtest.h>

#include "nrad/errors.hpp"
#include "nrad/matrix_core.hpp"
#include "test_support.hpp"

using namespace nrad;
using namespace nrad::test;

namespace {

const Complex I(0.0, 1.0);

template <typename F>
ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected nrad::Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(identity(2)), identity(2));
  EXPECT_EQ(adjoint(jordan()), mat2(0, 0, 1, 0));
  EXPECT_EQ(adjoint(diag({I, 0})), diag({-I, 0}));
}

TEST(Adjoint, RejectsNonSquareAndNonFinite) {
  EXPECT_EQ(error_code_of([] { adjoint(ComplexMatrix::Zero(2, 3)); }), ErrorCode::InvalidArgument);
  ComplexMatrix bad = identity(2);
  bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_EQ(error_code_of([&] { adjoint(bad); }), ErrorCode::InvalidArgument);
}

TEST(HermitianEigen, Diagonal) {
  const auto d = hermitian_eigen(diag({3, 1}));
  EXPECT_NEAR(d.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(d.eigenvalues(1), 3.0, 1e-14);
}

TEST(HermitianEigen, PauliX) {
  const auto d = hermitian_eigen(mat2(0, 1, 1, 0));
  EXPECT_NEAR(d.eigenvalues(0), -1.0, 1e-14);
  EXPECT_NEAR(d.eigenvalues(1), 1.0, 1e-14);
}

TEST(HermitianEigen, RandomGueReconstructs) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix h = random_hermitian(rng, 5);
    const auto d = hermitian_eigen(h);
    const ComplexMatrix& v = d.eigenvectors;
    const ComplexMatrix rebuilt = v * d.eigenvalues.cast<Complex>().asDiagonal() * v.adjoint();
    EXPECT_LE((rebuilt - h).norm(), 1e-10 * h.norm());
    EXPECT_LE((v.adjoint() * v - identity(5)).norm(), 1e-10);
    for (int i = 1; i < 5; ++i) EXPECT_LE(d.eigenvalues(i - 1), d.eigenvalues(i));
  }
}

TEST(HermitianEigen, RejectsNonHermitian) {
  EXPECT_EQ(error_code_of([] { hermitian_eigen(jordan()); }), ErrorCode::NotHermitian);
}

TEST(AbsValue, Examples) {
  EXPECT_LE(max_abs_diff(abs_value(jordan()), diag({0, 1})), 1e-12);
  EXPECT_LE(max_abs_diff(abs_value(adjoint(jordan())), diag({1, 0})), 1e-12);
  const double c = std::cos(0.3), s = std::sin(0.3);
  const ComplexMatrix u = mat2(c, -s * I, -s * I, c);
  EXPECT_LE(max_abs_diff(abs_value(u), identity(2)), 1e-12);
}

TEST(AbsValue, SquareIsGram) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = random_dim(rng, 2, 7);
    const ComplexMatrix t = random_matrix(rng, n);
    const ComplexMatrix a = abs_value(t);
    const ComplexMatrix gram = t.adjoint() * t;
    EXPECT_LE((a * a - gram).norm(), 1e-9 * gram.norm());
    EXPECT_LE(hermitian_defect(a), 1e-12);
    EXPECT_GE(hermitian_eigen((a + a.adjoint()) * 0.5).eigenvalues(0), -1e-10 * a.norm());
  }
}

TEST(MatrixPowerPsd, Examples) {
  EXPECT_LE(max_abs_diff(matrix_power_psd(diag({4, 9}), 0.5), diag({2, 3})), 1e-12);
  EXPECT_LE(max_abs_diff(matrix_power_psd(diag({0, 1}), 0.5), diag({0, 1})), 1e-12);
  std::mt19937_64 rng(3);
  const ComplexMatrix a = random_psd(rng, 4);
  EXPECT_LE(max_abs_diff(matrix_power_psd(a, 1.0), a), 1e-10 * a.norm());
}

TEST(MatrixPowerPsd, ZeroExponentIsFullIdentity) {
  EXPECT_LE(max_abs_diff(matrix_power_psd(diag({0, 5}), 0.0), identity(2)), 1e-14);
}

TEST(MatrixPowerPsd, PowersCompose) {
  std::mt19937_64 rng(4);
  const ComplexMatrix a = random_psd(rng, 5);
  const ComplexMatrix half = matrix_power_psd(a, 0.5);
  EXPECT_LE((half * half - a).norm(), 1e-9 * a.norm());
  EXPECT_LE((matrix_power_psd(a, 2.0) - a * a).norm(), 1e-9 * (a * a).norm());
}

TEST(MatrixPowerPsd, ClampsRoundoffButRejectsIndefinite) {
  EXPECT_NO_THROW(matrix_power_psd(diag({1, -1e-12}), 0.5));
  EXPECT_EQ(error_code_of([] { matrix_power_psd(diag({1, -0.1}), 0.5); }), ErrorCode::NotPSD);
  EXPECT_EQ(error_code_of([] { matrix_power_psd(jordan(), 0.5); }), ErrorCode::NotPSD);
}

TEST(OperatorNorm, Examples) {
  EXPECT_NEAR(operator_norm(jordan()), 1.0, 1e-14);
  EXPECT_NEAR(operator_norm(diag({2, -3})), 3.0, 1e-14);
  EXPECT_NEAR(operator_norm(identity(4)), 1.0, 1e-14);
  EXPECT_EQ(operator_norm(ComplexMatrix::Zero(3, 3)), 0.0);
}

TEST(NumericalRadius, Examples) {
  EXPECT_NEAR(numerical_radius(jordan()), 0.5, 1e-10);
  EXPECT_NEAR(numerical_radius(diag({2, -3})), 3.0, 1e-10);
  EXPECT_NEAR(numerical_radius(identity(5)), 1.0, 1e-10);
  EXPECT_EQ(numerical_radius(ComplexMatrix::Zero(3, 3)), 0.0);
  EXPECT_NEAR(numerical_radius(diag({-2.0 + 1.0 * I})), std::sqrt(5.0), 1e-14);
}

TEST(NumericalRadius, RejectsBadTolerance) {
  EXPECT_EQ(error_code_of([] { numerical_radius(identity(2), 0.0); }), ErrorCode::InvalidArgument);
}

TEST(NumericalRadius, JordanBlocksOfHigherOrder) {
  // w of the n×n shift is cos(π/(n+1)).
  for (int n = 2; n <= 8; ++n) EXPECT_NEAR(numerical_radius(shift_matrix(n)), std::cos(M_PI / (n + 1)), 1e-10);
}

TEST(NumericalRadius, MatchesBruteForceGrid) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 5; ++rep) {
    const ComplexMatrix t = random_matrix(rng, random_dim(rng, 2, 6));
    // The brute-force grid underestimates by O(h²) only.
    const double brute = brute_force_radius(t);
    const double w = numerical_radius(t);
    EXPECT_GE(w, brute - 1e-12);
    EXPECT_LE(w - brute, 1e-6 * w);
  }
}

TEST(NumericalRadius, NormSandwichAndHermitianCase) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 40; ++rep) {
    const int n = random_dim(rng, 2, 8);
    const ComplexMatrix t = random_matrix(rng, n);
    const double w = numerical_radius(t);
    const double norm = operator_norm(t);
    const double eps = 1e-8 * std::max(1.0, norm);
    EXPECT_GE(w, norm / 2 - eps);
    EXPECT_LE(w, norm + eps);

    const ComplexMatrix h = random_hermitian(rng, n);
    const auto ev = hermitian_eigen(h).eigenvalues;
    const double spectral = std::max(std::abs(ev(0)), std::abs(ev(n - 1)));
    EXPECT_NEAR(numerical_radius(h), spectral, 1e-8 * std::max(1.0, operator_norm(h)));
  }
}

TEST(NumericalRadius, DominatesSpectralRadius) {
  std::mt19937_64 rng(9);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = random_dim(rng, 2, 6);
    // Upper triangular: eigenvalues on the diagonal.
    ComplexMatrix t = random_matrix(rng, n).triangularView<Eigen::Upper>();
    double rho = 0.0;
    for (int i = 0; i < n; ++i) rho = std::max(rho, std::abs(t(i, i)));
    EXPECT_GE(numerical_radius(t), rho - 1e-6 * std::max(1.0, operator_norm(t)));

    // Normal: w equals the spectral radius.
    Eigen::HouseholderQR<ComplexMatrix> qr(random_matrix(rng, n));
    const ComplexMatrix q = qr.householderQ();
    const ComplexVector z = random_vector(rng, n);
    const ComplexMatrix normal = q * z.asDiagonal() * q.adjoint();
    EXPECT_NEAR(numerical_radius(normal), z.cwiseAbs().maxCoeff(), 1e-8 * std::max(1.0, z.cwiseAbs().maxCoeff()));
  }
}

TEST(NumericalRadius, Homogeneous) {
  std::mt19937_64 rng(10);
  for (int rep = 0; rep < 10; ++rep) {
    const ComplexMatrix t = random_matrix(rng, 4);
    const Complex c = cgauss(rng);
    const double w = numerical_radius(t);
    EXPECT_NEAR(numerical_radius(c * t), std::abs(c) * w, 1e-9 * std::abs(c) * w);
    EXPECT_NEAR(numerical_radius(std::polar(1.0, 1.234) * t), w, 1e-9 * w);
  }
}

TEST(Oracle, Examples) {
  EXPECT_NEAR(numerical_radius_oracle(identity(3), 1, 99), 1.0, 1e-12);
  const double j = numerical_radius_oracle(jordan(), 1000, 42);
  EXPECT_GE(j, 0.5 - 1e-4);
  EXPECT_LE(j, 0.5 + 1e-8);
  EXPECT_EQ(numerical_radius_oracle(ComplexMatrix::Zero(3, 3), 10, 7), 0.0);
}

TEST(Oracle, DeterministicAndBelowEngine) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix t = random_matrix(rng, random_dim(rng, 2, 8));
    const double o = numerical_radius_oracle(t, 30, 1000 + rep);
    EXPECT_EQ(o, numerical_radius_oracle(t, 30, 1000 + rep));
    const double w = numerical_radius(t);
    EXPECT_LE(o, w + 1e-8 * std::max(1.0, operator_norm(t)));
    EXPECT_GE(o, 0.95 * w);
  }
  EXPECT_EQ(error_code_of([] { numerical_radius_oracle(identity(2), 0, 1); }), ErrorCode::InvalidArgument);
}

TEST(AbsoluteSpectrum, MatchesDirectPowers) {
  std::mt19937_64 rng(13);
  const ComplexMatrix t = random_matrix(rng, 5);
  const AbsoluteSpectrum spec(t);
  const ComplexMatrix a = abs_value(t);
  const ComplexMatrix b = abs_value(t.adjoint());
  for (double p : {0.5, 1.0, 2.0, 3.0}) {
    EXPECT_LE((spec.abs_power(p) - matrix_power_psd(a, p)).norm(), 1e-9 * std::pow(operator_norm(t), p));
    EXPECT_LE((spec.adjoint_abs_power(p) - matrix_power_psd(b, p)).norm(), 1e-9 * std::pow(operator_norm(t), p));
  }
  EXPECT_LE(max_abs_diff(spec.abs_power(2.0), t.adjoint() * t), 1e-10 * t.squaredNorm());
}

TEST(Validation, Checks) {
  EXPECT_EQ(error_code_of([] { check_same_dim(identity(2), identity(3)); }), ErrorCode::DimensionMismatch);
  EXPECT_EQ(error_code_of([] { check_unit(vec({1, 1})); }), ErrorCode::NotUnitVector);
  EXPECT_NO_THROW(check_unit(vec({0, I})));
  EXPECT_EQ(inner(vec({I, 0}), vec({1, 0})), I);
  EXPECT_EQ(inner(vec({1, 0}), vec({I, 0})), -I);
}
