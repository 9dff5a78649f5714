#include "witness.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "errors.hpp"

namespace rfunc {

namespace {

const ComplexMatrix kSigma1{{0.0, 1.0}, {1.0, 0.0}};
const ComplexMatrix kSigma2{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
const ComplexMatrix kSigma3{{1.0, 0.0}, {0.0, -1.0}};

void require_levels(int n, const char* op) {
    if (n < 2) throw ContractError(std::string(op) + ": n must be at least 2");
}

Complex cross_component(const std::array<Complex, 3>& x, const std::array<Complex, 3>& y,
                        int i) {
    const int j = (i + 1) % 3;
    const int k = (i + 2) % 3;
    return x[j] * y[k] - x[k] * y[j];
}

} // namespace

BoundConstants best_constants(int n, bool traceless) {
    require_levels(n, "best_constants");
    BoundConstants c;
    c.n = n;
    c.traceless = traceless;
    const double root = traceless ? std::sqrt(2.0 * (1.0 - 1.0 / n)) : std::sqrt(2.0);
    c.c_minus = 0.5 * (1.0 - root);
    c.c_plus = 0.5 * (1.0 + root);
    return c;
}

std::pair<ComplexMatrix, ComplexMatrix> witness_general(int n, Sign sign) {
    require_levels(n, "witness_general");
    const BoundConstants c = best_constants(n, false);
    const double target = (sign == Sign::upper) ? c.c_plus : c.c_minus;
    ComplexMatrix a(n, n);
    a(0, 0) = 1.0;
    a(1, 1) = -2.0 * target;
    ComplexMatrix b(n, n);
    b(0, 1) = 1.0;
    return {a, b};
}

std::pair<ComplexMatrix, ComplexMatrix> witness_traceless(int n, Sign sign) {
    require_levels(n, "witness_traceless");
    ComplexMatrix a(n, n);
    ComplexMatrix b(n, n);
    if (n == 2) {
        a(0, 0) = 1.0;
        a(1, 1) = -1.0;
        if (sign == Sign::upper) {
            b(0, 1) = 1.0; // off-diagonal B picks up both diagonal gaps
        } else {
            b(0, 0) = 1.0; // diagonal B commutes with A: r = 0 exactly
        }
        return {a, b};
    }
    const BoundConstants bc = best_constants(n, true);
    const double c = (sign == Sign::upper) ? bc.c_plus : bc.c_minus;
    const double s = c + c / (n - 2);
    if (sign == Sign::upper) {
        const double a1 = std::sqrt(s);
        const double a2 = -std::sqrt(s - 1.0);
        const double rest = (std::sqrt(s - 1.0) - std::sqrt(s)) / (n - 2);
        a(0, 0) = a1;
        a(1, 1) = a2;
        for (int k = 2; k < n; ++k) a(k, k) = rest;
    } else {
        const double a1 = std::sqrt(-s);
        const double a2 = std::sqrt(1.0 - s);
        const double rest = (-std::sqrt(1.0 - s) - std::sqrt(-s)) / (n - 2);
        a(0, 0) = a1;
        a(1, 1) = a2;
        for (int k = 2; k < n; ++k) a(k, k) = rest;
    }
    b(1, 0) = 1.0;
    return {a, b};
}

ComplexMatrix witness_self(int n) {
    require_levels(n, "witness_self");
    ComplexMatrix a(n, n);
    a(0, 1) = 1.0;
    return a;
}

PauliVector pauli_decompose(const ComplexMatrix& m) {
    if (m.rows() != 2 || m.cols() != 2) {
        throw DimensionError("pauli_decompose: 2x2 matrix required");
    }
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    PauliVector p;
    p.a0 = trace(m) * inv_sqrt2;
    p.a[0] = trace_product(kSigma1, m) * inv_sqrt2;
    p.a[1] = trace_product(kSigma2, m) * inv_sqrt2;
    p.a[2] = trace_product(kSigma3, m) * inv_sqrt2;
    return p;
}

ComplexMatrix pauli_reconstruct(const PauliVector& p) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    ComplexMatrix m = p.a0 * inv_sqrt2 * ComplexMatrix::identity(2);
    m += p.a[0] * inv_sqrt2 * kSigma1;
    m += p.a[1] * inv_sqrt2 * kSigma2;
    m += p.a[2] * inv_sqrt2 * kSigma3;
    return m;
}

double r_pauli(const PauliVector& pa, const PauliVector& pb) {
    double norm_a = 0.0, norm_b = 0.0;
    Complex a_dot_b{};    // conjugate-linear in the first argument
    Complex abar_dot_b{}; // plain bilinear
    for (int i = 0; i < 3; ++i) {
        norm_a += std::norm(pa.a[i]);
        norm_b += std::norm(pb.a[i]);
        a_dot_b += std::conj(pa.a[i]) * pb.a[i];
        abar_dot_b += pa.a[i] * pb.a[i];
    }
    std::array<Complex, 3> bbar;
    for (int i = 0; i < 3; ++i) bbar[i] = std::conj(pb.a[i]);
    // Cross term: the scalar coefficient is conjugated, the vector part is
    // not; tr(A^+A [B^+,B]) expands to 2 Re(conj(a0) a_i) (conj(b) x b)_i.
    Complex cross_term{};
    for (int i = 0; i < 3; ++i) {
        cross_term += pa.a[i] * cross_component(bbar, pb.a, i);
    }
    return norm_a * norm_b - 0.5 * (std::norm(a_dot_b) + std::norm(abar_dot_b)) -
           (std::conj(pa.a0) * cross_term).imag();
}

std::pair<ComplexMatrix, ComplexMatrix> witness_qubit(Sign sign) {
    PauliVector pa, pb;
    // Left-handed triple: a = -z, b_R along x, b_I along y, |b_R| = |b_I|.
    pa.a[2] = -1.0;
    pa.a0 = (sign == Sign::upper) ? (std::numbers::sqrt2 - 1.0)
                                  : -(std::numbers::sqrt2 + 1.0);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    pb.a[0] = Complex(inv_sqrt2, 0.0);
    pb.a[1] = Complex(0.0, inv_sqrt2);
    return {pauli_reconstruct(pa), pauli_reconstruct(pb)};
}

} // namespace rfunc
