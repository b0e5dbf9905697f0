#include "nrad/lambda_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

LambdaOptimum closed_form(BoundId id, const BoundInputs& in, BoundMode mode) {
  LambdaOptimum opt;
  opt.method = OptimizerMethod::ClosedForm;
  if (!uses_lambda(id)) {
    opt.infimum = evaluate_bound(id, in, 1.0, mode).rhs_value;
    return opt;
  }
  const auto [p, q] = homographic_limits(id, in, mode);
  if (std::abs(p - q) <= 1e-12 * std::max({1.0, std::abs(p), std::abs(q)})) {
    opt.infimum = std::min(p, q);
  } else if (p < q) {
    opt.location = LambdaLocation::Zero;
    opt.lambda_star = 0.0;
    opt.infimum = p;
  } else {
    opt.location = LambdaLocation::Infinity;
    opt.lambda_star = std::numeric_limits<double>::infinity();
    opt.infimum = q;
  }
  return opt;
}

LambdaOptimum golden_section(BoundId id, const BoundInputs& in, BoundMode mode) {
  LambdaOptimum opt;
  opt.method = OptimizerMethod::GoldenSection;
  if (!uses_lambda(id)) {
    opt.infimum = evaluate_bound(id, in, 1.0, mode).rhs_value;
    return opt;
  }
  auto g = [&](double s) { return evaluate_bound(id, in, std::exp(s), mode).rhs_value; };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = -kLogLambdaRange;
  double hi = kLogLambdaRange;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double gc = g(c);
  double gd = g(d);
  while (hi - lo > kLogLambdaTolerance) {
    if (gc <= gd) {
      hi = d;
      d = c;
      gd = gc;
      c = hi - inv_phi * (hi - lo);
      gc = g(c);
    } else {
      lo = c;
      c = d;
      gc = gd;
      d = lo + inv_phi * (hi - lo);
      gd = g(d);
    }
  }
  double s_best = gc <= gd ? c : d;
  double best = std::min(gc, gd);
  for (double edge : {-kLogLambdaRange, kLogLambdaRange}) {
    const double ge = g(edge);
    if (ge < best) {
      best = ge;
      s_best = edge;
    }
  }

  opt.infimum = best;
  opt.lambda_star = std::exp(s_best);
  if (s_best <= -kLogLambdaRange + 1e-6) {
    opt.location = LambdaLocation::Zero;
  } else if (s_best >= kLogLambdaRange - 1e-6) {
    opt.location = LambdaLocation::Infinity;
  } else {
    opt.location = LambdaLocation::Interior;
  }
  return opt;
}

}  // namespace

std::string_view to_string(LambdaLocation where) {
  switch (where) {
    case LambdaLocation::Interior: return "interior";
    case LambdaLocation::Zero: return "lambda->0";
    case LambdaLocation::Infinity: return "lambda->inf";
    case LambdaLocation::Flat: return "flat";
  }
  return "?";
}

std::string_view to_string(OptimizerMethod method) {
  switch (method) {
    case OptimizerMethod::Auto: return "auto";
    case OptimizerMethod::ClosedForm: return "closed-form";
    case OptimizerMethod::GoldenSection: return "golden-section";
  }
  return "?";
}

bool is_homographic(BoundId id, BoundMode mode) {
  if (!uses_lambda(id)) return true;
  if (mode == BoundMode::InequalityCheck) return true;
  return id == BoundId::Th4 || id == BoundId::Th6 || id == BoundId::CorBomi;
}

// Limits derived by hand from each bound's coefficients at λ → 0 and λ → ∞;
// deliberately not routed through the coefficient functions.
HomographicLimits homographic_limits(BoundId id, const BoundInputs& in, BoundMode mode) {
  if (!uses_lambda(id) || !is_homographic(id, mode))
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(id)) + " in " + std::string(to_string(mode)) + " mode is not homographic in lambda");

  if (id == BoundId::AlDolat || id == BoundId::Th2) {
    if (!in.product) throw Error(ErrorCode::InvalidArgument, "product bound needs a second operator S");
    const auto& q = *in.product;
    if (id == BoundId::AlDolat) return {0.5 * q.sum_2 * q.w_product, 0.5 * q.sum_4};
    const double u = std::pow(q.w_product, q.r);
    return {0.5 * q.sum_2r * u, 0.25 * q.sum_4r + 0.5 * q.w_cross_2r};
  }

  if (!in.single) throw Error(ErrorCode::InvalidArgument, "bound needs single-operator quantities");
  const auto& q = *in.single;
  const double n4 = q.abs_sum_4;
  const double n2 = q.abs_sum_2;
  const double w2 = q.w_square;
  const double x = q.w_cross_2;
  switch (id) {
    case BoundId::Th3:
      return {0.5 * q.w * q.pair_sum_2, 0.25 * q.pair_sum_4 + 0.5 * q.w_pair};
    case BoundId::Th4:
      return {n4 / 16.0 + x / 8.0 + 3.0 * w2 * n2 / 8.0, 3.0 * n4 / 32.0 + 3.0 * x / 16.0 + 5.0 * w2 * n2 / 16.0};
    case BoundId::Th5: {
      const double v = q.w * q.w;
      return {v * n2 / 4.0 + v * w2 / 2.0, n4 / 16.0 + x / 8.0 + w2 * w2 / 4.0 + n2 * w2 / 4.0};
    }
    case BoundId::Th6: {
      const int n = q.n;
      const double inv = std::ldexp(1.0, -(2 * n + 1));
      double tail = 0.0;
      for (int k = 1; k <= 2 * n - 1; ++k) {
        double c = 1.0;  // C(2n, k) by the multiplicative formula
        for (int i = 1; i <= k; ++i) c = c * (2 * n - k + i) / i;
        tail += c * q.even_sums[static_cast<std::size_t>(k)] * std::pow(w2, 2 * n - k);
      }
      const double quart = q.even_sums[static_cast<std::size_t>(2 * n)];
      const double lead = q.even_sums[static_cast<std::size_t>(n)] * std::pow(w2, n);
      // (1+2λ)/(1+λ) runs from 1 to 2; 1/(1+λ) from 1 to 0.
      return {inv * (0.5 * quart + q.w_cross_2n + lead + tail), inv * (quart + 2.0 * q.w_cross_2n + tail)};
    }
    case BoundId::CorBomi:
      return {n4 / 8.0 + 3.0 * n2 * w2 / 8.0, n4 / 4.0 + n2 * w2 / 4.0};
    default:
      break;
  }
  throw Error(ErrorCode::UnknownBound, "no homographic limits for " + std::string(to_string(id)));
}

LambdaOptimum optimize_lambda(BoundId id, const BoundInputs& inputs, BoundMode mode, OptimizerMethod method) {
  if (method == OptimizerMethod::Auto)
    method = is_homographic(id, mode) ? OptimizerMethod::ClosedForm : OptimizerMethod::GoldenSection;
  if (method == OptimizerMethod::ClosedForm) return closed_form(id, inputs, mode);
  return golden_section(id, inputs, mode);
}

}  // namespace nrad
