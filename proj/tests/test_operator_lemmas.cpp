#include <gtest/gtest.h>

#include "nrad/errors.hpp"
#include "nrad/operator_lemmas.hpp"
#include "test_support.hpp"

using namespace nrad;
using namespace nrad::test;

namespace {

const double kRoot2 = std::sqrt(2.0);
const ComplexVector diag_unit = vec({1 / kRoot2, 1 / kRoot2});

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(McCarthy, Examples) {
  std::mt19937_64 rng(41);
  for (double r : {1.0, 2.5, 4.0}) {
    const auto rec = mccarthy_check(identity(3), random_unit(rng, 3), r);
    EXPECT_NEAR(rec.lhs, 1.0, 1e-13);
    EXPECT_NEAR(rec.rhs, 1.0, 1e-13);
  }
  const auto rec = mccarthy_check(diag({0, 4}), diag_unit, 2.0);
  EXPECT_NEAR(rec.lhs, 4.0, 1e-13);
  EXPECT_NEAR(rec.rhs, 8.0, 1e-13);
  for (int rep = 0; rep < 10; ++rep) {
    const auto one = mccarthy_check(random_psd(rng, 4), random_unit(rng, 4), 1.0);
    EXPECT_LE(std::abs(one.slack), 1e-12 * std::max(1.0, one.rhs));
  }
}

TEST(McCarthy, Errors) {
  expect_code(ErrorCode::NotPSD, [] { mccarthy_check(diag({1, -1}), diag_unit, 2.0); });
  expect_code(ErrorCode::NotUnitVector, [] { mccarthy_check(identity(2), vec({1, 1}), 2.0); });
  expect_code(ErrorCode::DimensionMismatch, [] { mccarthy_check(identity(3), diag_unit, 2.0); });
}

TEST(ConvexNorm, Examples) {
  std::mt19937_64 rng(42);
  const ComplexMatrix a = random_psd(rng, 3);
  for (double r : {1.0, 2.0, 3.3}) {
    const auto rec = convex_norm_check(a, a, r);
    EXPECT_NEAR(rec.slack, 0.0, 1e-10 * rec.rhs);
  }
  const auto rec = convex_norm_check(diag({1, 0}), diag({0, 1}), 2.0);
  EXPECT_NEAR(rec.lhs, 0.25, 1e-13);
  EXPECT_NEAR(rec.rhs, 0.5, 1e-13);
  for (int rep = 0; rep < 10; ++rep) {
    const auto lin = convex_norm_check(random_psd(rng, 4), random_psd(rng, 4), 1.0);
    EXPECT_LE(std::abs(lin.slack), 1e-12 * std::max(1.0, lin.rhs));
  }
}

TEST(ConvexNorm, Errors) {
  expect_code(ErrorCode::NotPSD, [] { convex_norm_check(diag({1, -1}), identity(2), 2.0); });
  expect_code(ErrorCode::DimensionMismatch, [] { convex_norm_check(identity(2), identity(3), 2.0); });
}

TEST(MixedSchwarz, Examples) {
  std::mt19937_64 rng(43);
  const ComplexVector x = random_unit(rng, 3);
  for (double alpha : {0.1, 0.5, 0.9}) {
    const auto rec = mixed_schwarz_check(identity(3), x, x, alpha);
    EXPECT_NEAR(rec.lhs, 1.0, 1e-13);
    EXPECT_NEAR(rec.rhs, 1.0, 1e-13);
  }
  const auto rec = mixed_schwarz_check(jordan(), vec({0, 1}), vec({1, 0}), 0.5);
  EXPECT_NEAR(rec.lhs, 1.0, 1e-13);
  EXPECT_NEAR(rec.rhs, 1.0, 1e-13);
}

TEST(MixedSchwarz, SquareRootPairOnDiagonal) {
  // |⟨Tx,x⟩|² ≤ ⟨|T|x,x⟩⟨|T*|x,x⟩, the α = ½, x = y case.
  std::mt19937_64 rng(44);
  for (int rep = 0; rep < 200; ++rep) {
    const int n = random_dim(rng, 2, 6);
    const ComplexMatrix t = random_matrix(rng, n);
    const ComplexVector x = random_vector(rng, n);
    const ComplexMatrix a = abs_value(t), b = abs_value(t.adjoint());
    const double lhs = std::norm(x.dot(t * x));
    const double rhs = x.dot(a * x).real() * x.dot(b * x).real();
    EXPECT_LE(lhs, rhs * (1 + 1e-10));
    const auto rec = mixed_schwarz_check(t, x, x, 0.5);
    EXPECT_NEAR(rec.rhs * rec.rhs, rhs, 1e-10 * rhs);
  }
}

TEST(MixedSchwarz, Errors) {
  expect_code(ErrorCode::DimensionMismatch, [] { mixed_schwarz_check(identity(3), diag_unit, diag_unit, 0.5); });
  expect_code(ErrorCode::InvalidArgument, [] { mixed_schwarz_check(identity(2), diag_unit, diag_unit, 1.0); });
}

TEST(Jensen, Examples) {
  auto rec = jensen_operator_check(diag({1, -1}), diag_unit, "square");
  EXPECT_NEAR(rec.lhs, 0.0, 1e-14);
  EXPECT_NEAR(rec.rhs, 1.0, 1e-14);
  rec = jensen_operator_check(diag({2, -2}), diag_unit, "abs");
  EXPECT_NEAR(rec.lhs, 0.0, 1e-14);
  EXPECT_NEAR(rec.rhs, 2.0, 1e-14);

  std::mt19937_64 rng(45);
  const ComplexMatrix h = random_hermitian(rng, 4);
  const auto eig = hermitian_eigen(h);
  for (const char* name : {"square", "abs", "quartic", "exp"}) {
    const ComplexVector v = eig.eigenvectors.col(2);
    rec = jensen_operator_check(h, v, name);
    EXPECT_NEAR(rec.slack, 0.0, 1e-10 * std::max(1.0, rec.rhs)) << name;
    EXPECT_EQ(rec.name, std::string("jensen_") + name);
  }
}

TEST(Jensen, SquareMatchesDirectQuadraticForm) {
  std::mt19937_64 rng(46);
  const ComplexMatrix h = random_hermitian(rng, 5);
  const ComplexVector x = random_unit(rng, 5);
  EXPECT_NEAR(jensen_operator_check(h, x, ConvexFunction::Square).rhs, (h * x).squaredNorm(), 1e-12 * h.squaredNorm());
}

TEST(Jensen, Errors) {
  expect_code(ErrorCode::NotHermitian, [] { jensen_operator_check(jordan(), diag_unit, "square"); });
  expect_code(ErrorCode::NotUnitVector, [] { jensen_operator_check(identity(2), vec({1, 1}), "square"); });
  expect_code(ErrorCode::UnknownFunction, [] { jensen_operator_check(identity(2), diag_unit, "cosh"); });
}

TEST(LemmaFuzz, AllHold) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> r_dist(1.0, 4.0), alpha_dist(0.05, 0.95);
  const char* fns[] = {"square", "abs", "quartic", "exp"};
  for (int rep = 0; rep < 500; ++rep) {
    const int n = random_dim(rng, 2, 6);
    const double r = r_dist(rng);
    auto rec = mccarthy_check(random_psd(rng, n), random_unit(rng, n), r);
    EXPECT_TRUE(rec.holds) << rec.slack;
    rec = convex_norm_check(random_psd(rng, n), random_psd(rng, n), r);
    EXPECT_TRUE(rec.holds) << rec.slack;
    rec = mixed_schwarz_check(random_matrix(rng, n), random_vector(rng, n), random_vector(rng, n), alpha_dist(rng));
    EXPECT_TRUE(rec.holds) << rec.slack;
    rec = jensen_operator_check(random_hermitian(rng, n) * 0.5, random_unit(rng, n), fns[rep % 4]);
    EXPECT_TRUE(rec.holds) << rec.slack;
  }
}
