#include <doctest.h>

#include <cmath>

#include "core/complex_matrix.hpp"
#include "core/rng.hpp"
#include "test_support.hpp"

using namespace rfunc;
using testsupport::pauli;

TEST_CASE("matrix construction validates entry count and finiteness") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, std::vector<Complex>(3)), DimensionError);
    std::vector<Complex> bad(4);
    bad[2] = Complex(std::nan(""), 0.0);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, bad), ContractError);
    std::vector<Complex> inf_entries(4);
    inf_entries[0] = Complex(0.0, INFINITY);
    CHECK_THROWS_AS(ComplexMatrix(2, 2, inf_entries), ContractError);
    CHECK_NOTHROW(ComplexMatrix(3, 2, std::vector<Complex>(6)));
}

TEST_CASE("hs_inner on fixed values") {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    CHECK(hs_inner(eye, eye).real() == doctest::Approx(2.0).epsilon(1e-14));

    const ComplexMatrix a{{0.0, 1.0}, {1.0, 1.0}};
    const ComplexMatrix b{{0.0, 0.0}, {1.0, 0.0}};
    // Oracle: tr(A^+ B) through naive arithmetic.
    const Complex expected = testsupport::naive_trace(
        testsupport::naive_mul(testsupport::naive_adjoint(testsupport::to_naive(a)),
                               testsupport::to_naive(b)));
    CHECK(std::abs(hs_inner(a, b) - expected) < 1e-14);
    CHECK(expected.real() == doctest::Approx(1.0));

    const ComplexMatrix zero(2, 2);
    CHECK(std::abs(hs_inner(pauli(1), zero)) == 0.0);

    CHECK_THROWS_AS(hs_inner(eye, ComplexMatrix(3, 3)), DimensionError);
}

TEST_CASE("hs_inner is conjugate symmetric and matches the squared norm") {
    Rng rng(11);
    for (int n = 2; n <= 5; ++n) {
        for (int it = 0; it < 1000; ++it) {
            const ComplexMatrix a = rng.ginibre(n, n);
            const ComplexMatrix b = rng.ginibre(n, n);
            const Complex ab = hs_inner(a, b);
            const Complex ba = hs_inner(b, a);
            CHECK(std::abs(ab - std::conj(ba)) < 1e-12 * std::max(1.0, std::abs(ab)));
            const double n2 = frobenius_norm_squared(a);
            CHECK(std::abs(hs_inner(a, a).real() - n2) < 1e-13 * std::max(1.0, n2));
        }
    }
}

TEST_CASE("frobenius norm on fixed values") {
    CHECK(frobenius_norm(ComplexMatrix::identity(2)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    const ComplexMatrix a{{0.0, 1.0}, {1.0, 1.0}};
    CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    const double c = 1.0 + std::numbers::sqrt2;
    const ComplexMatrix d{{1.0, 0.0}, {0.0, -c}};
    CHECK(frobenius_norm(d) == doctest::Approx(std::sqrt(1.0 + c * c)).epsilon(1e-15));
    CHECK(frobenius_norm(ComplexMatrix(3, 3)) == 0.0);
}

TEST_CASE("commutator and anticommutator") {
    Rng rng(5);
    const ComplexMatrix b = rng.ginibre(3, 3);
    CHECK(frobenius_norm(commutator(ComplexMatrix::identity(3), b)) < 1e-14);

    // Pauli multiplication oracle.
    const ComplexMatrix lhs = pauli(1) * pauli(2) - pauli(2) * pauli(1);
    CHECK(testsupport::max_abs_diff(commutator(pauli(1), pauli(2)), lhs) == 0.0);
    CHECK(testsupport::max_abs_diff(lhs, Complex(0.0, 2.0) * pauli(3)) < 1e-15);

    CHECK(testsupport::max_abs_diff(anticommutator(pauli(1), pauli(1)),
                                    2.0 * ComplexMatrix::identity(2)) < 1e-15);
    CHECK(frobenius_norm(commutator(b, b)) < 1e-14);
    CHECK_THROWS_AS(commutator(b, ComplexMatrix(2, 2)), DimensionError);
}

TEST_CASE("commutator norm is adjoint invariant") {
    Rng rng(17);
    for (int n = 2; n <= 5; ++n) {
        for (int it = 0; it < 200; ++it) {
            const ComplexMatrix a = rng.ginibre(n, n);
            const ComplexMatrix b = rng.ginibre(n, n);
            const double lhs = frobenius_norm_squared(commutator(a, b));
            const double rhs = frobenius_norm_squared(commutator(adjoint(a), adjoint(b)));
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, lhs));
        }
    }
}

TEST_CASE("cartesian split") {
    const ComplexMatrix h{{1.0, Complex(0.0, 2.0)}, {Complex(0.0, -2.0), -3.0}};
    auto parts = cartesian_split(h);
    CHECK(testsupport::max_abs_diff(parts.real_part, h) < 1e-15);
    CHECK(frobenius_norm(parts.imag_part) < 1e-15);

    auto anti = cartesian_split(Complex(0.0, 1.0) * h);
    CHECK(frobenius_norm(anti.real_part) < 1e-15);
    CHECK(testsupport::max_abs_diff(anti.imag_part, h) < 1e-15);

    // Entrywise oracle for the nilpotent example: (A + A^+)/2 and
    // (A - A^+)/(2i) computed by hand.
    const ComplexMatrix e01{{0.0, 1.0}, {0.0, 0.0}};
    auto np = cartesian_split(e01);
    CHECK(testsupport::max_abs_diff(np.real_part, 0.5 * pauli(1)) < 1e-15);
    CHECK(testsupport::max_abs_diff(np.imag_part, 0.5 * pauli(2)) < 1e-15);

    Rng rng(23);
    for (int it = 0; it < 100; ++it) {
        const ComplexMatrix a = rng.ginibre(4, 4);
        auto p = cartesian_split(a);
        CHECK(is_hermitian(p.real_part));
        CHECK(is_hermitian(p.imag_part));
        CHECK(testsupport::max_abs_diff(p.real_part + Complex(0.0, 1.0) * p.imag_part, a) <
              1e-14);
        const double total = frobenius_norm_squared(a);
        CHECK(std::abs(frobenius_norm_squared(p.real_part) +
                       frobenius_norm_squared(p.imag_part) - total) <
              1e-13 * std::max(1.0, total));
    }
}

TEST_CASE("kron fixed values and the mixed-product identity") {
    const ComplexMatrix eye2 = ComplexMatrix::identity(2);
    CHECK(testsupport::max_abs_diff(kron(eye2, eye2), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix d{{2.0, 0.0}, {0.0, 5.0}};
    const ComplexMatrix dk = kron(d, eye2);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Complex expected = (i == j) ? (i < 2 ? 2.0 : 5.0) : 0.0;
            CHECK(std::abs(dk(i, j) - expected) == 0.0);
        }

    // Definition oracle for sigma_1 kron sigma_3.
    const ComplexMatrix sk = kron(pauli(1), pauli(3));
    for (int i1 = 0; i1 < 2; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 2; ++i2)
                for (int j2 = 0; j2 < 2; ++j2)
                    CHECK(std::abs(sk(2 * i1 + i2, 2 * j1 + j2) -
                                   pauli(1)(i1, j1) * pauli(3)(i2, j2)) == 0.0);

    Rng rng(31);
    const ComplexMatrix a = rng.ginibre(2, 2), b = rng.ginibre(3, 3);
    const ComplexMatrix c = rng.ginibre(2, 2), d2 = rng.ginibre(3, 3);
    CHECK(testsupport::max_abs_diff(kron(a, b) * kron(c, d2), kron(a * c, b * d2)) < 1e-13);
}

TEST_CASE("column-stacking vec matches the kron identity") {
    Rng rng(37);
    const int n = 3;
    const ComplexMatrix a = rng.ginibre(n, n);
    const ComplexMatrix x = rng.ginibre(n, n);
    const ComplexMatrix b = rng.ginibre(n, n);
    const std::vector<Complex> vx = vec(x);
    const ComplexMatrix op = kron(transpose(b), a);
    std::vector<Complex> lhs(n * n, Complex{});
    for (int r = 0; r < n * n; ++r)
        for (int c = 0; c < n * n; ++c) lhs[r] += op(r, c) * vx[c];
    const std::vector<Complex> rhs = vec(a * x * b);
    for (int k = 0; k < n * n; ++k) CHECK(std::abs(lhs[k] - rhs[k]) < 1e-13);

    CHECK(testsupport::max_abs_diff(unvec(vx, n, n), x) == 0.0);
}
