#include "nrad/bound_catalog.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "nrad/errors.hpp"

namespace nrad {

namespace {

constexpr std::array kAllBounds = {
    BoundId::OpNorm, BoundId::Kittaneh, BoundId::ElHaddad, BoundId::AbuOmar, BoundId::Bhunia,
    BoundId::Dragomir, BoundId::AlDolat, BoundId::Th2, BoundId::Th3, BoundId::Th4,
    BoundId::Th5, BoundId::Th6, BoundId::CorBomi,
};

bool has_implicit_form(BoundId id) {
  return id == BoundId::AlDolat || id == BoundId::Th2 || id == BoundId::Th3 || id == BoundId::Th5;
}

void check_mode(BoundId id, BoundMode mode) {
  if (mode == BoundMode::InequalityCheck && !has_implicit_form(id))
    throw Error(ErrorCode::InvalidArgument,
                std::string(to_string(id)) + " has no self-referencing term; only explicit-certificate applies");
}

void check_bound_lambda(BoundId id, double lambda) {
  if (!uses_lambda(id)) return;
  if (id == BoundId::AlDolat) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda))
      throw Error(ErrorCode::InvalidArgument, "al_dolat needs finite lambda >= 0");
    return;
  }
  check_lambda(lambda);
}

const OperatorQuantities& need_single(BoundId id, const BoundInputs& in) {
  if (!in.single)
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(id)) + " needs single-operator quantities");
  return *in.single;
}

const ProductQuantities& need_product(BoundId id, const BoundInputs& in) {
  if (!in.product)
    throw Error(ErrorCode::InvalidArgument, std::string(to_string(id)) + " needs a second operator S");
  return *in.product;
}

// Evaluates an implicit bound u² ≤ a·u + b where the engine value of u is
// w^{base}; the check bounds w^{2·base}, the certificate bounds w^{base}.
BoundResult implicit_result(BoundId id, const BoundParams& params, BoundMode mode, const ImplicitForm& form,
                            double base, double w) {
  if (mode == BoundMode::InequalityCheck)
    return make_bound_result(id, params, mode, 2.0 * base, form.check_rhs(std::pow(w, base)), w);
  return make_bound_result(id, params, mode, base, form.certificate(), w);
}

}  // namespace

std::string_view to_string(BoundId id) {
  switch (id) {
    case BoundId::OpNorm: return "op_norm";
    case BoundId::Kittaneh: return "kittaneh";
    case BoundId::ElHaddad: return "el_haddad";
    case BoundId::AbuOmar: return "abu_omar";
    case BoundId::Bhunia: return "bhunia";
    case BoundId::Dragomir: return "dragomir";
    case BoundId::AlDolat: return "al_dolat";
    case BoundId::Th2: return "th2";
    case BoundId::Th3: return "th3";
    case BoundId::Th4: return "th4";
    case BoundId::Th5: return "th5";
    case BoundId::Th6: return "th6";
    case BoundId::CorBomi: return "cor_bomi";
  }
  return "?";
}

std::string_view to_string(BoundMode mode) {
  return mode == BoundMode::InequalityCheck ? "inequality-check" : "explicit-certificate";
}

BoundId bound_from_name(std::string_view name) {
  for (BoundId id : kAllBounds)
    if (to_string(id) == name) return id;
  throw Error(ErrorCode::UnknownBound, "no bound named '" + std::string(name) + "'");
}

BoundMode mode_from_name(std::string_view name) {
  if (name == "inequality-check" || name == "inequality") return BoundMode::InequalityCheck;
  if (name == "explicit-certificate" || name == "certificate") return BoundMode::ExplicitCertificate;
  throw Error(ErrorCode::InvalidArgument, "unknown bound mode '" + std::string(name) + "'");
}

std::span<const BoundId> all_bounds() { return kAllBounds; }

std::vector<BoundMode> supported_modes(BoundId id) {
  if (has_implicit_form(id)) return {BoundMode::InequalityCheck, BoundMode::ExplicitCertificate};
  return {BoundMode::ExplicitCertificate};
}

bool is_product_bound(BoundId id) {
  return id == BoundId::Dragomir || id == BoundId::AlDolat || id == BoundId::Th2;
}

bool uses_lambda(BoundId id) {
  switch (id) {
    case BoundId::AlDolat:
    case BoundId::Th2:
    case BoundId::Th3:
    case BoundId::Th4:
    case BoundId::Th5:
    case BoundId::Th6:
    case BoundId::CorBomi:
      return true;
    default:
      return false;
  }
}

BoundResult make_bound_result(BoundId id, const BoundParams& params, BoundMode mode, double exponent_p,
                              double rhs, double w) {
  BoundResult res;
  res.bound_name = std::string(to_string(id));
  res.params = params;
  res.mode = mode;
  res.exponent_p = exponent_p;
  res.rhs_value = rhs;
  res.w_power_value = std::pow(w, exponent_p);
  res.slack = rhs - res.w_power_value;
  res.holds = res.slack >= -kBoundTolerance * std::max({1.0, std::abs(rhs), std::abs(res.w_power_value)});
  return res;
}

double resolve_implicit_quadratic(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw Error(ErrorCode::InvalidArgument, "quadratic coefficients must be finite");
  if (a < 0.0 || b < 0.0) throw Error(ErrorCode::NegativeCoefficient, "quadratic coefficients must be >= 0");
  return 0.5 * (a + std::sqrt(a * a + 4.0 * b));
}

Th2Coefficients th2_coefficients(double lambda) {
  return {1.0 / (2.0 * (1.0 + lambda)), lambda / (4.0 * (1.0 + lambda)), lambda / (2.0 * (1.0 + lambda))};
}

Th3Coefficients th3_coefficients(double lambda) {
  return {lambda / (4.0 * (1.0 + lambda)), lambda / (2.0 * (1.0 + lambda)), 1.0 / (2.0 * (1.0 + lambda))};
}

Th4Coefficients th4_coefficients(double lambda) {
  return {(2.0 + 3.0 * lambda) / (32.0 * (1.0 + lambda)), (2.0 + 3.0 * lambda) / (16.0 * (1.0 + lambda)),
          (6.0 + 5.0 * lambda) / (16.0 * (1.0 + lambda))};
}

Th5Coefficients th5_coefficients(double lambda) {
  const double d = 1.0 + lambda;
  return {lambda / (16.0 * d), lambda / (8.0 * d), lambda / (4.0 * d),
          lambda / (4.0 * d),  1.0 / (4.0 * d),    1.0 / (2.0 * d)};
}

Th6Coefficients th6_coefficients(double lambda, int n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be >= 1");
  if (n > kMaxPowerIndex) throw Error(ErrorCode::Overflow, "n must be <= 15");
  const double outer = std::ldexp(1.0, -(2 * n + 1));  // 1 / 2^{2n+1}
  const double ratio = (1.0 + 2.0 * lambda) / (1.0 + lambda);
  Th6Coefficients c;
  c.quartic = 0.5 * outer * ratio;
  c.cross = outer * ratio;
  c.leading = outer / (1.0 + lambda);
  for (int k = 1; k <= 2 * n - 1; ++k) c.tail.push_back(outer * static_cast<double>(binomial(2 * n, k)));
  return c;
}

CorBomiCoefficients cor_bomi_coefficients(double lambda) {
  return {(1.0 + 2.0 * lambda) / (8.0 * (1.0 + lambda)), (3.0 + 2.0 * lambda) / (8.0 * (1.0 + lambda))};
}

AlDolatCoefficients al_dolat_coefficients(double lambda) {
  return {1.0 / (2.0 * (1.0 + lambda)), lambda / (2.0 * (1.0 + lambda))};
}

namespace formula {

ImplicitForm th2(double lambda, double sum_2r, double sum_4r, double w_cross_2r) {
  const auto c = th2_coefficients(lambda);
  return {c.product * sum_2r, c.quartic * sum_4r + c.cross * w_cross_2r};
}

ImplicitForm th3(double lambda, double pair_sum_2, double pair_sum_4, double w_pair) {
  const auto c = th3_coefficients(lambda);
  return {c.linear * pair_sum_2, c.quartic * pair_sum_4 + c.cross * w_pair};
}

ImplicitForm th5(double lambda, double w_square, double abs_sum_2, double abs_sum_4, double w_cross_2) {
  // With v = w²(T): v² ≤ (c_q N4 + c_c W + c_s w2² + c_m N2 w2) + (c_r N2 + c_w w2)·v.
  const auto c = th5_coefficients(lambda);
  return {c.radius_sum * abs_sum_2 + c.radius_square * w_square,
          c.quartic * abs_sum_4 + c.cross * w_cross_2 + c.square_sq * w_square * w_square +
              c.square_sum * abs_sum_2 * w_square};
}

ImplicitForm al_dolat(double lambda, double sum_2, double sum_4) {
  const auto c = al_dolat_coefficients(lambda);
  return {c.product * sum_2, c.quartic * sum_4};
}

double th4(double lambda, double w_square, double abs_sum_2, double abs_sum_4, double w_cross_2) {
  const auto c = th4_coefficients(lambda);
  return c.quartic * abs_sum_4 + c.cross * w_cross_2 + c.mixed * w_square * abs_sum_2;
}

double th6(double lambda, int n, double w_square, std::span<const double> even_sums, double w_cross_2n) {
  const auto c = th6_coefficients(lambda, n);
  if (even_sums.size() < static_cast<std::size_t>(2 * n + 1))
    throw Error(ErrorCode::InvalidArgument, "th6 needs even sums for k = 0..2n");
  double rhs = c.quartic * even_sums[static_cast<std::size_t>(2 * n)] + c.cross * w_cross_2n +
               c.leading * even_sums[static_cast<std::size_t>(n)] * std::pow(w_square, n);
  for (int k = 1; k <= 2 * n - 1; ++k)
    rhs += c.tail[static_cast<std::size_t>(k - 1)] * even_sums[static_cast<std::size_t>(k)] *
           std::pow(w_square, 2 * n - k);
  return rhs;
}

double cor_bomi(double lambda, double w_square, double abs_sum_2, double abs_sum_4) {
  const auto c = cor_bomi_coefficients(lambda);
  return c.quartic * abs_sum_4 + c.mixed * abs_sum_2 * w_square;
}

}  // namespace formula

OperatorQuantities compute_operator_quantities(const ComplexMatrix& t, const BoundParams& params) {
  check_square(t);
  BoundParams shape = params;
  shape.lambda = 1.0;  // quantities do not depend on λ
  shape.validate();

  const AbsoluteSpectrum spec(t);
  auto sum_norm = [&](double p_abs, double p_adj) {
    return operator_norm(spec.abs_power(p_abs) + spec.adjoint_abs_power(p_adj));
  };

  OperatorQuantities q;
  q.r = params.r;
  q.n = params.n;
  q.alpha = params.alpha;
  q.w = numerical_radius(t);
  q.norm = spec.singular_values()(0);
  q.w_square = numerical_radius(t * t);

  // 2n >= 2, so the list always covers the squared and quartic sums.
  for (int k = 0; k <= 2 * params.n; ++k) q.even_sums.push_back(sum_norm(2.0 * k, 2.0 * k));
  q.abs_sum_1 = sum_norm(1.0, 1.0);
  q.abs_sum_2 = q.even_sums[1];
  q.abs_sum_4 = q.even_sums[2];
  q.abs_sum_2r = sum_norm(2.0 * params.r, 2.0 * params.r);

  q.w_cross_1 = numerical_radius(spec.abs_power(1.0) * spec.adjoint_abs_power(1.0));
  q.w_cross_2 = numerical_radius(spec.adjoint_abs_power(2.0) * spec.abs_power(2.0));

  const double a = params.alpha;
  q.pair_sum_2 = sum_norm(2.0 * a, 2.0 * (1.0 - a));
  q.pair_sum_4 = sum_norm(4.0 * a, 4.0 * (1.0 - a));
  // At α = ½ the cross term is w(|T*||T|), the adjoint of |T||T*|.
  q.w_pair = a == 0.5 ? q.w_cross_1
                      : numerical_radius(spec.adjoint_abs_power(2.0 * (1.0 - a)) * spec.abs_power(2.0 * a));
  q.w_cross_2n = params.n == 1 ? q.w_cross_2
                               : numerical_radius(spec.adjoint_abs_power(2.0 * params.n) *
                                                  spec.abs_power(2.0 * params.n));
  return q;
}

ProductQuantities compute_product_quantities(const ComplexMatrix& t, const ComplexMatrix& s, double r) {
  check_square(t);
  check_square(s);
  check_same_dim(t, s);
  if (!(r >= 1.0) || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "r must be finite and >= 1");

  const AbsoluteSpectrum st(t);
  const AbsoluteSpectrum ss(s);
  ProductQuantities q;
  q.r = r;
  // S*T = (T*S)*, and a matrix and its adjoint share the numerical radius.
  q.w_product = numerical_radius(t.adjoint() * s);
  q.sum_2r = operator_norm(st.abs_power(2.0 * r) + ss.abs_power(2.0 * r));
  q.sum_4r = operator_norm(st.abs_power(4.0 * r) + ss.abs_power(4.0 * r));
  q.w_cross_2r = numerical_radius(ss.abs_power(2.0 * r) * st.abs_power(2.0 * r));
  if (r == 1.0) {
    q.sum_2 = q.sum_2r;
    q.sum_4 = q.sum_4r;
    q.w_cross_2 = q.w_cross_2r;
  } else {
    q.sum_2 = operator_norm(st.abs_power(2.0) + ss.abs_power(2.0));
    q.sum_4 = operator_norm(st.abs_power(4.0) + ss.abs_power(4.0));
    q.w_cross_2 = numerical_radius(ss.abs_power(2.0) * st.abs_power(2.0));
  }
  return q;
}

BoundInputs prepare_bound_inputs(const ComplexMatrix& t, const ComplexMatrix* s, const BoundParams& params) {
  BoundInputs in;
  in.params = params;
  in.single = compute_operator_quantities(t, params);
  if (s != nullptr) in.product = compute_product_quantities(t, *s, params.r);
  return in;
}

BoundResult evaluate_bound(BoundId id, const BoundInputs& in, double lambda, BoundMode mode) {
  check_mode(id, mode);
  check_bound_lambda(id, lambda);
  BoundParams params = in.params;
  params.lambda = lambda;
  const double r = params.r;

  switch (id) {
    case BoundId::OpNorm: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 1.0, q.norm, q.w);
    }
    case BoundId::Kittaneh: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 1.0, 0.5 * q.abs_sum_1, q.w);
    }
    case BoundId::ElHaddad: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 2.0 * r, 0.5 * q.abs_sum_2r, q.w);
    }
    case BoundId::AbuOmar: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 2.0, 0.25 * q.abs_sum_2 + 0.5 * q.w_square, q.w);
    }
    case BoundId::Bhunia: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 2.0, 0.25 * q.abs_sum_2 + 0.5 * q.w_cross_1, q.w);
    }
    case BoundId::Dragomir: {
      const auto& q = need_product(id, in);
      return make_bound_result(id, params, mode, r, 0.5 * q.sum_2r, q.w_product);
    }
    case BoundId::AlDolat: {
      const auto& q = need_product(id, in);
      return implicit_result(id, params, mode, formula::al_dolat(lambda, q.sum_2, q.sum_4), 1.0, q.w_product);
    }
    case BoundId::Th2: {
      const auto& q = need_product(id, in);
      return implicit_result(id, params, mode, formula::th2(lambda, q.sum_2r, q.sum_4r, q.w_cross_2r), r,
                             q.w_product);
    }
    case BoundId::Th3: {
      const auto& q = need_single(id, in);
      return implicit_result(id, params, mode, formula::th3(lambda, q.pair_sum_2, q.pair_sum_4, q.w_pair), 1.0,
                             q.w);
    }
    case BoundId::Th4: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 4.0,
                               formula::th4(lambda, q.w_square, q.abs_sum_2, q.abs_sum_4, q.w_cross_2), q.w);
    }
    case BoundId::Th5: {
      const auto& q = need_single(id, in);
      return implicit_result(id, params, mode,
                             formula::th5(lambda, q.w_square, q.abs_sum_2, q.abs_sum_4, q.w_cross_2), 2.0, q.w);
    }
    case BoundId::Th6: {
      const auto& q = need_single(id, in);
      if (q.n != params.n) throw Error(ErrorCode::InvalidArgument, "quantities were computed for another n");
      return make_bound_result(id, params, mode, 4.0 * params.n,
                               formula::th6(lambda, params.n, q.w_square, q.even_sums, q.w_cross_2n), q.w);
    }
    case BoundId::CorBomi: {
      const auto& q = need_single(id, in);
      return make_bound_result(id, params, mode, 4.0,
                               formula::cor_bomi(lambda, q.w_square, q.abs_sum_2, q.abs_sum_4), q.w);
    }
  }
  throw Error(ErrorCode::UnknownBound, "unhandled bound");
}

BoundResult bound_classical(const ComplexMatrix& t, std::string_view name, double r) {
  const BoundId id = bound_from_name(name);
  if (is_product_bound(id) || uses_lambda(id))
    throw Error(ErrorCode::UnknownBound, "'" + std::string(name) + "' is not a single-operator classical bound");
  BoundParams params;
  params.r = r;
  return evaluate_bound(id, prepare_bound_inputs(t, nullptr, params), params.lambda,
                        BoundMode::ExplicitCertificate);
}

BoundResult bound_product_classical(const ComplexMatrix& t, const ComplexMatrix& s, std::string_view name,
                                    double r, double lambda, BoundMode mode) {
  const BoundId id = bound_from_name(name);
  if (id != BoundId::Dragomir && id != BoundId::AlDolat)
    throw Error(ErrorCode::UnknownBound, "'" + std::string(name) + "' is not a classical product bound");
  check_same_dim(t, s);
  BoundInputs in;
  in.params.r = r;
  in.product = compute_product_quantities(t, s, r);
  if (id == BoundId::Dragomir) mode = BoundMode::ExplicitCertificate;
  return evaluate_bound(id, in, lambda, mode);
}

DualBoundResult bound_th2(const ComplexMatrix& t, const ComplexMatrix& s, double r, double lambda) {
  check_lambda(lambda);
  check_same_dim(t, s);
  BoundInputs in;
  in.params.r = r;
  in.product = compute_product_quantities(t, s, r);
  return {evaluate_bound(BoundId::Th2, in, lambda, BoundMode::InequalityCheck),
          evaluate_bound(BoundId::Th2, in, lambda, BoundMode::ExplicitCertificate)};
}

DualBoundResult bound_th3(const ComplexMatrix& t, double alpha, double lambda) {
  BoundParams params;
  params.alpha = alpha;
  params.lambda = lambda;
  params.validate();
  const auto in = prepare_bound_inputs(t, nullptr, params);
  return {evaluate_bound(BoundId::Th3, in, lambda, BoundMode::InequalityCheck),
          evaluate_bound(BoundId::Th3, in, lambda, BoundMode::ExplicitCertificate)};
}

BoundResult bound_th4(const ComplexMatrix& t, double lambda) {
  check_lambda(lambda);
  return evaluate_bound(BoundId::Th4, prepare_bound_inputs(t, nullptr, {}), lambda,
                        BoundMode::ExplicitCertificate);
}

DualBoundResult bound_th5(const ComplexMatrix& t, double lambda) {
  check_lambda(lambda);
  const auto in = prepare_bound_inputs(t, nullptr, {});
  return {evaluate_bound(BoundId::Th5, in, lambda, BoundMode::InequalityCheck),
          evaluate_bound(BoundId::Th5, in, lambda, BoundMode::ExplicitCertificate)};
}

BoundResult bound_th6(const ComplexMatrix& t, int n, double lambda) {
  BoundParams params;
  params.n = n;
  params.lambda = lambda;
  params.validate();
  return evaluate_bound(BoundId::Th6, prepare_bound_inputs(t, nullptr, params), lambda,
                        BoundMode::ExplicitCertificate);
}

BoundResult bound_cor_bomi(const ComplexMatrix& t, double lambda) {
  check_lambda(lambda);
  return evaluate_bound(BoundId::CorBomi, prepare_bound_inputs(t, nullptr, {}), lambda,
                        BoundMode::ExplicitCertificate);
}

}  // namespace nrad
