#pragma once

// Operator-level inequalities used as proof steps by the refined bounds,
// each checkable on a concrete matrix and vector.

#include <string_view>

#include "nrad/matrix_core.hpp"
#include "nrad/scalar_inequalities.hpp"

namespace nrad {

/// ⟨Tx,x⟩^r ≤ ⟨T^r x,x⟩ for PSD T, unit x, r ≥ 1.
InequalityRecord mccarthy_check(const ComplexMatrix& t, const ComplexVector& x, double r);

/// ‖((A+B)/2)^r‖ ≤ ‖(A^r + B^r)/2‖ for PSD A, B, r ≥ 1.
InequalityRecord convex_norm_check(const ComplexMatrix& a, const ComplexMatrix& b, double r);

/// |⟨Tx,y⟩| ≤ ‖|T|^α x‖·‖|T*|^{1−α} y‖.
InequalityRecord mixed_schwarz_check(const ComplexMatrix& t, const ComplexVector& x, const ComplexVector& y,
                                     double alpha);

enum class ConvexFunction { Square, Abs, Quartic, Exp };

/// Registry lookup: "square", "abs", "quartic", "exp". Throws UnknownFunction.
ConvexFunction convex_function_from_name(std::string_view name);

/// h(⟨Tx,x⟩) ≤ ⟨h(T)x,x⟩ for Hermitian T, unit x, convex h.
InequalityRecord jensen_operator_check(const ComplexMatrix& t, const ComplexVector& x, ConvexFunction h);
InequalityRecord jensen_operator_check(const ComplexMatrix& t, const ComplexVector& x, std::string_view h_id);

}  // namespace nrad
