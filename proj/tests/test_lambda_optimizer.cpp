#include <gtest/gtest.h>

#include "nrad/ensemble.hpp"
#include "nrad/errors.hpp"
#include "nrad/lambda_optimizer.hpp"
#include "test_support.hpp"

using namespace nrad;
using namespace nrad::test;

TEST(OptimizeLambda, Th4Jordan) {
  const auto in = prepare_bound_inputs(jordan(), nullptr, {});
  const auto lim = homographic_limits(BoundId::Th4, in, BoundMode::ExplicitCertificate);
  EXPECT_NEAR(lim.at_zero, 1.0 / 16, 1e-12);
  EXPECT_NEAR(lim.at_infinity, 3.0 / 32, 1e-12);
  const auto opt = optimize_lambda(BoundId::Th4, in, BoundMode::ExplicitCertificate);
  EXPECT_NEAR(opt.infimum, 1.0 / 16, 1e-12);
  EXPECT_EQ(opt.location, LambdaLocation::Zero);
  EXPECT_EQ(opt.lambda_star, 0.0);
  EXPECT_EQ(opt.method, OptimizerMethod::ClosedForm);
}

TEST(OptimizeLambda, Th2IdentityIsFlat) {
  const ComplexMatrix i2 = identity(2);
  const auto in = prepare_bound_inputs(i2, &i2, {});
  const auto opt = optimize_lambda(BoundId::Th2, in, BoundMode::InequalityCheck);
  EXPECT_NEAR(opt.infimum, 1.0, 1e-12);
  EXPECT_EQ(opt.location, LambdaLocation::Flat);
  EXPECT_EQ(opt.lambda_star, 1.0);
}

TEST(OptimizeLambda, LambdaFreeBoundIsFlat) {
  const auto in = prepare_bound_inputs(jordan(), nullptr, {});
  const auto opt = optimize_lambda(BoundId::Kittaneh, in, BoundMode::ExplicitCertificate);
  EXPECT_EQ(opt.location, LambdaLocation::Flat);
  EXPECT_NEAR(opt.infimum, 0.5, 1e-12);
}

TEST(OptimizeLambda, ClosedFormMatchesGoldenSection) {
  EnsembleConfig cfg{Ensemble::Ginibre, 4, 20, 7};
  BoundParams params;
  params.n = 2;
  for (int trial = 0; trial < cfg.trials; ++trial) {
    const auto in = prepare_bound_inputs(generate_matrix(cfg, trial), nullptr, params);
    for (BoundId id : {BoundId::Th4, BoundId::Th6, BoundId::CorBomi}) {
      const auto cf = optimize_lambda(id, in, BoundMode::ExplicitCertificate, OptimizerMethod::ClosedForm);
      const auto gs = optimize_lambda(id, in, BoundMode::ExplicitCertificate, OptimizerMethod::GoldenSection);
      EXPECT_NEAR(cf.infimum, gs.infimum, 1e-6 * std::max(1.0, cf.infimum)) << to_string(id);
    }
  }
}

TEST(OptimizeLambda, HomographicStructure) {
  // rhs(λ)(1+λ) is affine in λ with slope Q for every stated inequality.
  std::mt19937_64 rng(61);
  const ComplexMatrix t = random_matrix(rng, 4), s = random_matrix(rng, 4);
  BoundParams params;
  params.r = 1.5;
  params.alpha = 0.35;
  const auto in = prepare_bound_inputs(t, &s, params);
  const double l1 = 0.3, l2 = 1.7, l3 = 9.0;
  for (BoundId id : all_bounds()) {
    if (!uses_lambda(id)) continue;
    for (BoundMode mode : supported_modes(id)) {
      if (!is_homographic(id, mode)) continue;
      const auto lim = homographic_limits(id, in, mode);
      auto g = [&](double l) { return evaluate_bound(id, in, l, mode).rhs_value * (1 + l); };
      const double scale = std::max({1.0, lim.at_zero, lim.at_infinity});
      EXPECT_NEAR(g(l2) - g(l1), lim.at_infinity * (l2 - l1), 1e-10 * scale * (l2 - l1)) << to_string(id);
      EXPECT_NEAR(g(l3) - g(l2), lim.at_infinity * (l3 - l2), 1e-10 * scale * (l3 - l2)) << to_string(id);
      EXPECT_NEAR(evaluate_bound(id, in, 1e8, mode).rhs_value, lim.at_infinity, 1e-6 * scale) << to_string(id);
      EXPECT_NEAR(g(0.0 + 1e-12), lim.at_zero, 1e-9 * scale) << to_string(id);
    }
  }
}

TEST(OptimizeLambda, CertificateUsesGoldenSection) {
  std::mt19937_64 rng(62);
  const ComplexMatrix t = random_matrix(rng, 3);
  const auto in = prepare_bound_inputs(t, nullptr, {});
  const auto opt = optimize_lambda(BoundId::Th5, in, BoundMode::ExplicitCertificate);
  EXPECT_EQ(opt.method, OptimizerMethod::GoldenSection);
  // No grid point beats the reported infimum.
  for (double s = -20; s <= 20; s += 0.5)
    EXPECT_GE(evaluate_bound(BoundId::Th5, in, std::exp(s), BoundMode::ExplicitCertificate).rhs_value,
              opt.infimum - 1e-9 * opt.infimum);
  EXPECT_THROW(homographic_limits(BoundId::Th5, in, BoundMode::ExplicitCertificate), Error);
}
