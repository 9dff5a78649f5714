#pragma once

#include <vector>

#include "complex_matrix.hpp"

namespace rfunc {

struct SvdResult {
    std::vector<double> singular_values; // descending, nonnegative
    ComplexMatrix left;                  // unitary, columns are left vectors
    ComplexMatrix right;                 // unitary, columns are right vectors
};

/// Singular value decomposition of a square matrix by one-sided Jacobi
/// rotations: A = left * diag(s) * right^dagger.
SvdResult svd(const ComplexMatrix& a);

struct EigenResult {
    std::vector<Complex> values;  // eigenvalues; real for the Hermitian path
    ComplexMatrix vectors;        // column j pairs with values[j], unit norm
    std::vector<double> residuals; // per pair ||M v - lambda v||
    std::vector<bool> defective;  // pair unusable as a true eigenvector
    double tolerance;             // residual tolerance the flags used
};

/// Eigendecomposition of a Hermitian matrix: Householder tridiagonalization
/// followed by implicit-shift QL sweeps. Values ascend; vectors are
/// orthonormal. Throws ContractError when the input is not Hermitian within
/// 1e-12 * max(1, ||M||).
EigenResult eig_hermitian(const ComplexMatrix& m);

/// Eigendecomposition of a general complex matrix: Hessenberg reduction plus
/// explicitly shifted QR with Wilkinson shifts, then eigenvectors by
/// back-substitution on the Schur factor. Pairs whose vectors cannot be
/// trusted (large residual, or a rank-deficient eigenvalue cluster) are
/// flagged defective instead of rejected.
EigenResult eig_general(const ComplexMatrix& m);

} // namespace rfunc
