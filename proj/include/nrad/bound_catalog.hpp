#pragma once

// Upper bounds on powers of the numerical radius.
//
// Every bound is evaluated from engine-computed quantities of T (and S for
// product bounds): operator norms of sums of powers of |T|, |T*|, |S| and
// numerical radii such as w(T²). Bounds whose right side contains a power of
// the bounded quantity itself (u² ≤ a·u + b) are exposed in two modes:
//
//   inequality-check      rhs evaluated with the engine's own u; this is the
//                         inequality exactly as stated.
//   explicit-certificate  u ≤ (a + √(a² + 4b))/2, an a-priori bound that does
//                         not need u.
//
// Bounds with no such self-reference only have the certificate mode.

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nrad/matrix_core.hpp"
#include "nrad/scalar_inequalities.hpp"

namespace nrad {

enum class BoundId {
  OpNorm,
  Kittaneh,
  ElHaddad,
  AbuOmar,
  Bhunia,
  Dragomir,
  AlDolat,
  Th2,
  Th3,
  Th4,
  Th5,
  Th6,
  CorBomi,
};

enum class BoundMode { InequalityCheck, ExplicitCertificate };

std::string_view to_string(BoundId id);
std::string_view to_string(BoundMode mode);
/// Stable identifiers: op_norm, kittaneh, el_haddad, abu_omar, bhunia,
/// dragomir, al_dolat, th2, th3, th4, th5, th6, cor_bomi.
BoundId bound_from_name(std::string_view name);
/// Accepts "inequality-check"/"inequality" and "explicit-certificate"/"certificate".
BoundMode mode_from_name(std::string_view name);

/// Catalog order; also the order rows appear in suite reports.
std::span<const BoundId> all_bounds();
std::vector<BoundMode> supported_modes(BoundId id);
bool is_product_bound(BoundId id);
bool uses_lambda(BoundId id);

/// Relative tolerance on BoundResult::slack.
inline constexpr double kBoundTolerance = 1e-8;

struct BoundResult {
  std::string bound_name;
  BoundParams params;
  double rhs_value = 0.0;      // bound on w^p
  double exponent_p = 1.0;     // the power p of w being bounded
  double w_power_value = 0.0;  // engine w^p on the same input
  double slack = 0.0;
  bool holds = true;
  BoundMode mode = BoundMode::ExplicitCertificate;
};

BoundResult make_bound_result(BoundId id, const BoundParams& params, BoundMode mode, double exponent_p,
                              double rhs, double w);

struct DualBoundResult {
  BoundResult inequality_check;
  BoundResult certificate;
};

/// Engine-computed quantities of a single operator T. Names use A_p = |T|^p
/// and B_p = |T*|^p; "sum" fields are operator norms.
struct OperatorQuantities {
  double r = 1.0;
  int n = 1;
  double alpha = 0.5;

  double w = 0.0;           // w(T)
  double norm = 0.0;        // ‖T‖
  double w_square = 0.0;    // w(T²)
  double abs_sum_1 = 0.0;   // ‖A_1 + B_1‖
  double abs_sum_2 = 0.0;   // ‖A_2 + B_2‖
  double abs_sum_4 = 0.0;   // ‖A_4 + B_4‖
  double abs_sum_2r = 0.0;  // ‖A_{2r} + B_{2r}‖
  double w_cross_1 = 0.0;   // w(A_1 B_1) = w(B_1 A_1)
  double w_cross_2 = 0.0;   // w(B_2 A_2)
  // Power pair g(s) = s^α, h(s) = s^{1−α}.
  double pair_sum_2 = 0.0;  // ‖g²(|T|) + h²(|T*|)‖
  double pair_sum_4 = 0.0;  // ‖g⁴(|T|) + h⁴(|T*|)‖
  double w_pair = 0.0;      // w(h²(|T*|) g²(|T|))
  // even_sums[k] = ‖A_{2k} + B_{2k}‖ for k = 0..2n.
  std::vector<double> even_sums;
  double w_cross_2n = 0.0;  // w(B_{2n} A_{2n})
};

/// Quantities of the pair (T, S) for bounds on w(T*S) = w(S*T).
struct ProductQuantities {
  double r = 1.0;
  double w_product = 0.0;   // w(T*S)
  double sum_2r = 0.0;      // ‖|T|^{2r} + |S|^{2r}‖
  double sum_4r = 0.0;      // ‖|T|^{4r} + |S|^{4r}‖
  double w_cross_2r = 0.0;  // w(|S|^{2r} |T|^{2r})
  double sum_2 = 0.0;
  double sum_4 = 0.0;
  double w_cross_2 = 0.0;   // w(|S|² |T|²)
};

OperatorQuantities compute_operator_quantities(const ComplexMatrix& t, const BoundParams& params);
ProductQuantities compute_product_quantities(const ComplexMatrix& t, const ComplexMatrix& s, double r);

struct BoundInputs {
  BoundParams params;
  std::optional<OperatorQuantities> single;
  std::optional<ProductQuantities> product;
};

/// Computes whatever the catalog needs for T, and for (T, S) when S is given.
BoundInputs prepare_bound_inputs(const ComplexMatrix& t, const ComplexMatrix* s, const BoundParams& params);

/// Evaluates one bound at `lambda` (ignored by λ-free bounds). Product
/// bounds need inputs.product, all others inputs.single.
BoundResult evaluate_bound(BoundId id, const BoundInputs& inputs, double lambda, BoundMode mode);

/// Positive root of u² = a·u + b, i.e. the largest u with u² ≤ a·u + b.
double resolve_implicit_quadratic(double a, double b);

// Coefficients of the refined bounds as functions of λ.
struct Th2Coefficients {
  double product;  // on w^r(T*S)·‖|T|^{2r} + |S|^{2r}‖
  double quartic;  // on ‖|T|^{4r} + |S|^{4r}‖
  double cross;    // on w(|S|^{2r}|T|^{2r})
};
struct Th3Coefficients {
  double quartic;  // on ‖g⁴(|T|) + h⁴(|T*|)‖
  double cross;    // on w(h²(|T*|)g²(|T|))
  double linear;   // on w(T)·‖g²(|T|) + h²(|T*|)‖
};
struct Th4Coefficients {
  double quartic;  // on ‖|T|⁴ + |T*|⁴‖
  double cross;    // on w(|T*|²|T|²)
  double mixed;    // on w(T²)·‖|T|² + |T*|²‖
};
struct Th5Coefficients {
  double quartic;       // ‖|T|⁴ + |T*|⁴‖
  double cross;         // w(|T*|²|T|²)
  double square_sq;     // w²(T²)
  double square_sum;    // ‖|T|² + |T*|²‖·w(T²)
  double radius_sum;    // w²(T)·‖|T|² + |T*|²‖
  double radius_square; // w²(T)·w(T²)
};
struct Th6Coefficients {
  double quartic;            // ‖|T|^{4n} + |T*|^{4n}‖
  double cross;              // w(|T*|^{2n}|T|^{2n})
  double leading;            // ‖|T|^{2n} + |T*|^{2n}‖·wⁿ(T²)
  std::vector<double> tail;  // tail[k−1] on ‖|T|^{2k} + |T*|^{2k}‖·w^{2n−k}(T²), k = 1..2n−1
};
struct CorBomiCoefficients {
  double quartic;  // ‖|T|⁴ + |T*|⁴‖
  double mixed;    // ‖|T|² + |T*|²‖·w(T²)
};
struct AlDolatCoefficients {
  double product;  // ‖|T|² + |S|²‖·w(S*T)
  double quartic;  // ‖|T|⁴ + |S|⁴‖
};

Th2Coefficients th2_coefficients(double lambda);
Th3Coefficients th3_coefficients(double lambda);
Th4Coefficients th4_coefficients(double lambda);
Th5Coefficients th5_coefficients(double lambda);
Th6Coefficients th6_coefficients(double lambda, int n);
CorBomiCoefficients cor_bomi_coefficients(double lambda);
AlDolatCoefficients al_dolat_coefficients(double lambda);

/// u² ≤ a·u + b with the bounded quantity u left symbolic.
struct ImplicitForm {
  double a;
  double b;
  double check_rhs(double u) const { return a * u + b; }
  double certificate() const { return resolve_implicit_quadratic(a, b); }
};

// Right sides on precomputed terms; shared by evaluate_bound and the chains.
namespace formula {
ImplicitForm th2(double lambda, double sum_2r, double sum_4r, double w_cross_2r);
ImplicitForm th3(double lambda, double pair_sum_2, double pair_sum_4, double w_pair);
ImplicitForm th5(double lambda, double w_square, double abs_sum_2, double abs_sum_4, double w_cross_2);
ImplicitForm al_dolat(double lambda, double sum_2, double sum_4);
double th4(double lambda, double w_square, double abs_sum_2, double abs_sum_4, double w_cross_2);
/// even_sums[k] = ‖|T|^{2k} + |T*|^{2k}‖ for k = 0..2n.
double th6(double lambda, int n, double w_square, std::span<const double> even_sums, double w_cross_2n);
double cor_bomi(double lambda, double w_square, double abs_sum_2, double abs_sum_4);
}  // namespace formula

// Single-call conveniences that compute the quantities themselves.
BoundResult bound_classical(const ComplexMatrix& t, std::string_view name, double r = 1.0);
BoundResult bound_product_classical(const ComplexMatrix& t, const ComplexMatrix& s, std::string_view name,
                                    double r, double lambda,
                                    BoundMode mode = BoundMode::InequalityCheck);
DualBoundResult bound_th2(const ComplexMatrix& t, const ComplexMatrix& s, double r, double lambda);
DualBoundResult bound_th3(const ComplexMatrix& t, double alpha, double lambda);
BoundResult bound_th4(const ComplexMatrix& t, double lambda);
DualBoundResult bound_th5(const ComplexMatrix& t, double lambda);
BoundResult bound_th6(const ComplexMatrix& t, int n, double lambda);
BoundResult bound_cor_bomi(const ComplexMatrix& t, double lambda);

}  // namespace nrad
