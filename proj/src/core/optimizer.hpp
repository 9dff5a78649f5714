#pragma once

#include <cstdint>
#include <vector>

#include "complex_matrix.hpp"

namespace rfunc {

struct ExtremizeTask {
    int n = 2;
    bool maximize = true;
    bool traceless_a = false;
    int restarts = 20;
    std::uint64_t seed = 0;
    int max_sweeps = 500;
    double convergence_tol = 1e-12;
};

struct ExtremizeResult {
    double ratio = 0.0;
    ComplexMatrix a; // unit Frobenius norm
    ComplexMatrix b; // unit Frobenius norm
    int sweeps_used = 0;
    int restart_index = 0;
    std::vector<double> trajectory; // ratio after each sweep of the winner
};

/// Hermitian M with vec(B)^dagger M vec(B) = r(A, B) for every B
/// (column-stacking vec). r is a quadratic form in B for fixed A.
ComplexMatrix quad_form_in_B(const ComplexMatrix& a);

/// Hermitian N with vec(A)^dagger N vec(A) = r(A, B) for every A. When
/// traceless is set, N is compressed onto an orthonormal basis of the
/// traceless subspace and has size n^2 - 1.
ComplexMatrix quad_form_in_A(const ComplexMatrix& b, bool traceless);

/// Orthonormal basis of the traceless subspace of n x n matrices:
/// the n^2 - n unit matrices E_ij (i != j) plus n - 1 diagonal
/// traceless combinations.
std::vector<ComplexMatrix> traceless_basis(int n);

/// Alternating exact extremization of r(A,B)/(||A||^2 ||B||^2): each half
/// step replaces one argument by the extreme eigenvector of the quadratic
/// form in that argument, so the ratio is monotone sweep over sweep.
ExtremizeResult alternating_extremize(const ExtremizeTask& task);

/// Max relative error between the quadratic-form gradients of r and central
/// finite differences, over all 4 n^2 real coordinates of (A, B).
double finite_diff_check(const ComplexMatrix& a, const ComplexMatrix& b, double step);

} // namespace rfunc
