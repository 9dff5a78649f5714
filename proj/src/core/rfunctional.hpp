#pragma once

#include <array>
#include <optional>
#include <utility>

#include "complex_matrix.hpp"

namespace rfunc {

/// Index of each evaluation route inside RReport::alternates. The wire names
/// ("eq1", "eq9", ...) match the JSON serialization.
enum RAlternate : int {
    kAltDefinition = 0,      // eq1:  (<[B,A],BA> + <[B,A+],BA+>)/2
    kAltExpandedTrace = 1,   // eq9:  fully expanded four-trace form
    kAltAnticommutator = 2,  // eq10: tr({A,A+}B+B)/2 - Re tr(A+ B A B+)
    kAltCommutatorAB = 3,    // eq11: (||[A,B]||^2   + tr(A+A [B+,B]))/2
    kAltCommutatorAdBd = 4,  // eq12: (||[A+,B+]||^2 + tr(A+A [B+,B]))/2
    kAltCommutatorABd = 5,   // eq13: (||[A,B+]||^2  + tr(AA+ [B+,B]))/2
    kAltCommutatorAdB = 6,   // eq14: (||[A+,B]||^2  + tr(AA+ [B+,B]))/2
    kAltSymmetrized = 7,     // eq15: quarter-weight symmetrized form
};

struct RReport {
    double value = 0.0;                  // canonical value (expanded-trace route)
    std::array<double, 8> alternates{};  // all routes, indexed by RAlternate
    double max_spread = 0.0;             // max pairwise disagreement
    std::optional<double> ratio;         // value / (||A||^2 ||B||^2); absent at zero norm
};

/// r(A, B): real-valued, quadratic in each argument separately. Evaluated
/// through the fully expanded trace form, which needs the fewest products.
/// The imaginary residue of the complex arithmetic is asserted below
/// 1e-12 * max(1, ||A||^2 ||B||^2) and then discarded.
double r_eval(const ComplexMatrix& a, const ComplexMatrix& b);

/// Evaluates every equivalent expression for r(A, B) and their spread.
RReport r_report(const ComplexMatrix& a, const ComplexMatrix& b);

/// r(A, A) = tr(A^dagger A [A^dagger, A]) / 2; zero for normal A.
double r_self(const ComplexMatrix& a);

/// Returns (r(alpha A, beta B), |alpha|^2 |beta|^2 r(A, B)).
std::pair<double, double> scaling_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                        Complex alpha, Complex beta);

/// Returns (r(U A U^dagger, U B U^dagger), r(A, B)). Throws ContractError
/// unless U is unitary within 1e-12.
std::pair<double, double> unitary_invariance_check(const ComplexMatrix& a,
                                                   const ComplexMatrix& b,
                                                   const ComplexMatrix& u);

/// Returns (r(A,B), r(A_R,B), r(A_I,B)); the first equals the sum of the
/// other two.
std::array<double, 3> cartesian_additivity_check(const ComplexMatrix& a,
                                                 const ComplexMatrix& b);

/// Returns (||[A,B]||^2, 2 ||A||^2 ||B||^2); lhs <= rhs always.
std::pair<double, double> bw_check(const ComplexMatrix& a, const ComplexMatrix& b);

/// Returns (r(A,B), sqrt(2) ||A||^2 ||B||^2); the sharp constant
/// (1+sqrt(2))/2 is strictly tighter than this bound.
std::pair<double, double> sqrt2_bound_check(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace rfunc
