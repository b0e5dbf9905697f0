#pragma once

// Vector-level inequalities: each evaluator returns both sides and the slack
// so the same code drives fuzzing and equality-case regressions.

#include <cstdint>
#include <optional>
#include <string>

#include "nrad/matrix_core.hpp"

namespace nrad {

/// Relative slack tolerance for InequalityRecord::holds.
inline constexpr double kRecordTolerance = 1e-10;

/// Largest n accepted by the 2n-th power Buzano refinement and the w^{4n}
/// bound; C(2n, r) is exact in 64-bit arithmetic well past this.
inline constexpr int kMaxPowerIndex = 15;

struct InequalityRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;  // rhs − lhs
  bool holds = true;
  // Upper bound that rhs itself is claimed to satisfy, when the inequality
  // is the first link of a two-sided chain.
  std::optional<double> outer;
};

InequalityRecord make_record(std::string name, double lhs, double rhs);

/// Free scalars of the refined bounds. `lambda` is the value f(t) > 0; every
/// refined bound depends on f only through this value.
struct BoundParams {
  double lambda = 1.0;
  double r = 1.0;
  int n = 1;
  double alpha = 0.5;

  void validate() const;
  bool operator==(const BoundParams&) const = default;
};

void check_lambda(double lambda);

/// Exact binomial coefficient; throws Overflow when it would not fit.
std::uint64_t binomial(int n, int k);

InequalityRecord cs_refinement_gen(const ComplexVector& x, const ComplexVector& y, double lambda);
InequalityRecord cs_refinement_two(const ComplexVector& x, const ComplexVector& y, double lambda);

InequalityRecord buzano(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e);
InequalityRecord buzano_refined(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                                double lambda);
/// Right side uses the expanded square (‖x‖‖y‖ + |⟨x,y⟩|)².
InequalityRecord buzano_refined_two(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                                    double lambda);
InequalityRecord buzano_power(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                              double lambda, int n);

/// Young: a^t b^{1−t} ≤ t·a + (1−t)·b. t = ½ is AM–GM.
InequalityRecord young_amgm(double a, double b, double t);

}  // namespace nrad
