#include "nrad/scalar_inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

// ‖x‖‖y‖ and |⟨x,y⟩|.
struct PairTerms {
  double norms;
  double modulus;
};

PairTerms pair_terms(const ComplexVector& x, const ComplexVector& y) {
  check_vector(x);
  check_vector(y);
  if (x.size() != y.size()) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  return {x.norm() * y.norm(), std::abs(inner(x, y))};
}

// |⟨x,e⟩⟨e,y⟩| for unit e.
double buzano_product(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e) {
  check_unit(e);
  if (e.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "vector dimensions differ");
  return std::abs(inner(x, e) * inner(e, y));
}

}  // namespace

InequalityRecord make_record(std::string name, double lhs, double rhs) {
  InequalityRecord rec;
  rec.name = std::move(name);
  rec.lhs = lhs;
  rec.rhs = rhs;
  rec.slack = rhs - lhs;
  rec.holds = rec.slack >= -kRecordTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return rec;
}

void check_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw Error(ErrorCode::InvalidArgument, "lambda must be finite and > 0");
}

void BoundParams::validate() const {
  check_lambda(lambda);
  if (!(r >= 1.0) || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "r must be finite and >= 1");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n > kMaxPowerIndex) throw Error(ErrorCode::Overflow, "n must be <= 15");
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0, 1)");
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw Error(ErrorCode::InvalidArgument, "binomial needs 0 <= k <= n");
  if (n > 62) throw Error(ErrorCode::Overflow, "binomial argument too large");
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return c;
}

InequalityRecord cs_refinement_gen(const ComplexVector& x, const ComplexVector& y, double lambda) {
  check_lambda(lambda);
  const auto [a, c] = pair_terms(x, y);
  const double rhs = lambda / (1.0 + lambda) * a * a + 1.0 / (1.0 + lambda) * c * a;
  auto rec = make_record("cs_refinement_gen", c * c, rhs);
  rec.outer = a * a;
  return rec;
}

InequalityRecord cs_refinement_two(const ComplexVector& x, const ComplexVector& y, double lambda) {
  check_lambda(lambda);
  const auto [a, c] = pair_terms(x, y);
  const double rhs =
      lambda / (2.0 * (1.0 + lambda)) * a * a + (2.0 + lambda) / (2.0 * (1.0 + lambda)) * c * a;
  auto rec = make_record("cs_refinement_two", c * c, rhs);
  rec.outer = a * a;
  return rec;
}

InequalityRecord buzano(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e) {
  const auto [a, c] = pair_terms(x, y);
  return make_record("buzano", buzano_product(x, y, e), 0.5 * (a + c));
}

InequalityRecord buzano_refined(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                                double lambda) {
  check_lambda(lambda);
  const auto [a, c] = pair_terms(x, y);
  const double b = buzano_product(x, y, e);
  const double rhs = (2.0 + 3.0 * lambda) / (8.0 * (1.0 + lambda)) * a * a +
                     (6.0 + 5.0 * lambda) / (8.0 * (1.0 + lambda)) * a * c;
  return make_record("buzano_refined", b * b, rhs);
}

InequalityRecord buzano_refined_two(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                                    double lambda) {
  check_lambda(lambda);
  const auto [a, c] = pair_terms(x, y);
  const double b = buzano_product(x, y, e);
  const double rhs = lambda / (4.0 * (1.0 + lambda)) * (a * a + c * c + 2.0 * a * c) +
                     1.0 / (2.0 * (1.0 + lambda)) * b * (a + c);
  return make_record("buzano_refined_two", b * b, rhs);
}

InequalityRecord buzano_power(const ComplexVector& x, const ComplexVector& y, const ComplexVector& e,
                              double lambda, int n) {
  check_lambda(lambda);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n > kMaxPowerIndex) throw Error(ErrorCode::Overflow, "n must be <= 15");
  const auto [a, c] = pair_terms(x, y);
  const double b = buzano_product(x, y, e);

  const double scale = std::ldexp(1.0, -2 * n);  // 1 / 2^{2n}
  double sum = 0.0;
  for (int r = 1; r <= 2 * n - 1; ++r)
    sum += static_cast<double>(binomial(2 * n, r)) * std::pow(a, r) * std::pow(c, 2 * n - r);
  const double rhs = scale * (1.0 + 2.0 * lambda) / (1.0 + lambda) * std::pow(a, 2 * n) +
                     scale / (1.0 + lambda) * std::pow(a, n) * std::pow(c, n) + scale * sum;
  return make_record("buzano_power", std::pow(b, 2 * n), rhs);
}

InequalityRecord young_amgm(double a, double b, double t) {
  if (!(a >= 0.0) || !(b >= 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw Error(ErrorCode::InvalidArgument, "young_amgm needs finite a, b >= 0");
  if (!(t >= 0.0 && t <= 1.0)) throw Error(ErrorCode::InvalidArgument, "t must lie in [0, 1]");
  // std::pow(0, 0) = 1, so a zero factor raised to 0 contributes 1 and the
  // other factor decides; a = b = 0 gives 0 for every t.
  const double lhs = std::pow(a, t) * std::pow(b, 1.0 - t);
  return make_record("young_amgm", lhs, t * a + (1.0 - t) * b);
}

}  // namespace nrad
