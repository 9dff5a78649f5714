#pragma once

#include <array>
#include <utility>

#include "complex_matrix.hpp"

namespace rfunc {

enum class Sign { upper, lower };

/// Sharp constants for c_- ||A||^2 ||B||^2 <= r(A,B) <= c_+ ||A||^2 ||B||^2.
/// Without the trace restriction c_pm = (1 +- sqrt(2))/2 for every n; with
/// tr A = 0 they tighten to (1 +- sqrt(2(1 - 1/n)))/2, which is exactly
/// (0, 1) at n = 2.
struct BoundConstants {
    int n = 0;
    bool traceless = false;
    double c_minus = 0.0;
    double c_plus = 0.0;
};

BoundConstants best_constants(int n, bool traceless);

/// Pair attaining the unrestricted sharp bound: A = diag(1, -2c, 0, ...)
/// and B with a single unit entry in position (1, 2).
std::pair<ComplexMatrix, ComplexMatrix> witness_general(int n, Sign sign);

/// Pair attaining the traceless sharp bound; A is real diagonal traceless,
/// B has a single unit entry.
std::pair<ComplexMatrix, ComplexMatrix> witness_traceless(int n, Sign sign);

/// Rank-1 matrix with orthogonal range and support: r(A,A) = ||A||^4 / 2.
ComplexMatrix witness_self(int n);

/// Coefficients of a 2x2 matrix over the orthonormal basis
/// F_0 = I/sqrt(2), F_i = sigma_i/sqrt(2).
struct PauliVector {
    Complex a0{};
    std::array<Complex, 3> a{};
};

PauliVector pauli_decompose(const ComplexMatrix& m); // 2x2 only
ComplexMatrix pauli_reconstruct(const PauliVector& p);

/// r(A, B) for qubit matrices written in Pauli coordinates:
/// |a|^2 |b|^2 - (|a.b|^2 + |conj(a).b|^2)/2
///   - Im(conj(a0) sum_i a_i (conj(b) x b)_i),
/// where a.b = sum conj(a_i) b_i is conjugate-linear in the first slot. The
/// scalar part of B never enters; adding a multiple of the identity to B
/// leaves r unchanged.
double r_pauli(const PauliVector& a, const PauliVector& b);

/// Qubit pair built from a left-handed orthonormal triple {a, b_R, b_I}
/// (a . (b_R x b_I) = -1) with |b_R| = |b_I| and b0 = 0. The scalar part of
/// A has magnitude sqrt(2)-1 (upper) or sqrt(2)+1 (lower); its sign is
/// chosen so the cross term pushes toward the targeted bound.
std::pair<ComplexMatrix, ComplexMatrix> witness_qubit(Sign sign);

} // namespace rfunc
