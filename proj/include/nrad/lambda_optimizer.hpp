#pragma once

// Best choice of the free value λ = f(t) for a bound on a fixed input.
//
// With every engine-computed term held fixed, the stated right sides and the
// th4/th6/cor_bomi certificates are homographic in λ, rhs(λ) = (P + Qλ)/(1+λ),
// so their infimum over λ > 0 is min(P, Q), approached at a boundary. The
// resolved-quadratic certificates are not of that shape and are minimized by
// golden-section search over s = ln λ ∈ [−20, 20].

#include <string_view>

#include "nrad/bound_catalog.hpp"

namespace nrad {

enum class LambdaLocation { Interior, Zero, Infinity, Flat };
enum class OptimizerMethod { Auto, ClosedForm, GoldenSection };

std::string_view to_string(LambdaLocation where);
std::string_view to_string(OptimizerMethod method);

struct LambdaOptimum {
  double lambda_star = 1.0;  // 0 or +inf at a boundary, 1 when flat
  LambdaLocation location = LambdaLocation::Flat;
  double infimum = 0.0;
  OptimizerMethod method = OptimizerMethod::ClosedForm;
};

/// Boundary values P = lim_{λ→0⁺} rhs and Q = lim_{λ→∞} rhs.
struct HomographicLimits {
  double at_zero;
  double at_infinity;
};

inline constexpr double kLogLambdaRange = 20.0;
inline constexpr double kLogLambdaTolerance = 1e-9;

bool is_homographic(BoundId id, BoundMode mode);

/// Closed-form P and Q; throws InvalidArgument for non-homographic forms.
HomographicLimits homographic_limits(BoundId id, const BoundInputs& inputs, BoundMode mode);

LambdaOptimum optimize_lambda(BoundId id, const BoundInputs& inputs, BoundMode mode,
                              OptimizerMethod method = OptimizerMethod::Auto);

}  // namespace nrad
