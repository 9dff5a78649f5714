#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "core/eigen.hpp"
#include "core/rng.hpp"
#include "test_support.hpp"

using namespace rfunc;
using testsupport::pauli;

namespace {

double reconstruction_residual(const ComplexMatrix& a, const SvdResult& s) {
    ComplexMatrix scaled = s.left;
    for (int j = 0; j < scaled.cols(); ++j)
        for (int i = 0; i < scaled.rows(); ++i) scaled(i, j) *= s.singular_values[j];
    return frobenius_norm(scaled * adjoint(s.right) - a);
}

// Multiset comparison of eigenvalues against expected roots.
double match_roots(std::vector<Complex> got, std::vector<Complex> expected) {
    double worst = 0.0;
    for (const Complex& root : expected) {
        std::size_t best = 0;
        double dist = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < got.size(); ++k) {
            const double d = std::abs(got[k] - root);
            if (d < dist) {
                dist = d;
                best = k;
            }
        }
        worst = std::max(worst, dist);
        got.erase(got.begin() + best);
    }
    return worst;
}

} // namespace

TEST_CASE("svd of fixed matrices") {
    const ComplexMatrix d{{3.0, 0.0}, {0.0, 1.0}};
    const SvdResult sd = svd(d);
    CHECK(sd.singular_values[0] == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(sd.singular_values[1] == doctest::Approx(1.0).epsilon(1e-14));

    // Singular values of the nilpotent are the square roots of eig(A^+A) = {1, 0}.
    const ComplexMatrix nil{{0.0, 1.0}, {0.0, 0.0}};
    const SvdResult sn = svd(nil);
    CHECK(sn.singular_values[0] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(sn.singular_values[1] == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(reconstruction_residual(nil, sn) < 1e-12);

    Rng rng(3);
    const ComplexMatrix u = rng.haar_unitary(4);
    for (double s : svd(u).singular_values) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("svd reconstruction over random ensembles") {
    Rng rng(7);
    for (int n = 2; n <= 6; ++n) {
        for (int it = 0; it < 50; ++it) {
            const ComplexMatrix a = rng.ginibre(n, n);
            const SvdResult s = svd(a);
            CHECK(reconstruction_residual(a, s) < 1e-12 * std::max(1.0, frobenius_norm(a)));
            CHECK(std::is_sorted(s.singular_values.rbegin(), s.singular_values.rend()));
            CHECK(is_unitary(s.left, 1e-11));
            CHECK(is_unitary(s.right, 1e-11));
        }
        // Rank deficient: outer product of thin factors.
        const ComplexMatrix low = rng.ginibre(n, 1) * rng.ginibre(1, n);
        const SvdResult s = svd(low);
        CHECK(reconstruction_residual(low, s) < 1e-12 * std::max(1.0, frobenius_norm(low)));
        for (int k = 1; k < n; ++k) CHECK(s.singular_values[k] < 1e-12);
        CHECK(is_unitary(s.left, 1e-11));
    }
}

TEST_CASE("eig_hermitian on fixed matrices") {
    const ComplexMatrix d{{-1.0, 0.0}, {0.0, 2.0}};
    const EigenResult ed = eig_hermitian(d);
    CHECK(ed.values[0].real() == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(ed.values[1].real() == doctest::Approx(2.0).epsilon(1e-14));

    // 2x2 characteristic polynomial oracle: lambda^2 - 1 = 0.
    const EigenResult es = eig_hermitian(pauli(1));
    CHECK(es.values[0].real() == doctest::Approx(-1.0).epsilon(1e-13));
    CHECK(es.values[1].real() == doctest::Approx(1.0).epsilon(1e-13));

    // Rank-1 projector.
    Rng rng(13);
    const int n = 5;
    ComplexMatrix v = rng.ginibre(n, 1);
    const double vn = frobenius_norm(v);
    v *= Complex(1.0 / vn, 0.0);
    const ComplexMatrix proj = v * adjoint(v);
    const EigenResult ep = eig_hermitian(proj);
    for (int k = 0; k + 1 < n; ++k) CHECK(std::abs(ep.values[k]) < 1e-12);
    CHECK(ep.values[n - 1].real() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("eig_hermitian rejects non-Hermitian input") {
    const ComplexMatrix bad{{0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(eig_hermitian(bad), ContractError);
}

TEST_CASE("eig_hermitian random ensembles: residuals and orthonormality") {
    Rng rng(19);
    for (int n : {2, 3, 5, 9, 16, 25}) {
        for (int it = 0; it < (n > 9 ? 5 : 30); ++it) {
            const ComplexMatrix m = rng.hermitian(n);
            const EigenResult e = eig_hermitian(m);
            const double tol = 1e-10 * std::max(1.0, frobenius_norm(m));
            for (int k = 0; k < n; ++k) {
                CHECK(e.residuals[k] < tol);
                CHECK(std::abs(e.values[k].imag()) == 0.0);
            }
            for (int k = 1; k < n; ++k) CHECK(e.values[k - 1].real() <= e.values[k].real());
            CHECK(is_unitary(e.vectors, 1e-10));
        }
    }
}

TEST_CASE("eig_general on fixed matrices") {
    const ComplexMatrix d{{Complex(1.0, 2.0), 0.0, 0.0},
                          {0.0, Complex(-3.0, 0.5), 0.0},
                          {0.0, 0.0, Complex(0.0, -1.0)}};
    const EigenResult ed = eig_general(d);
    CHECK(match_roots(ed.values, {Complex(1.0, 2.0), Complex(-3.0, 0.5), Complex(0.0, -1.0)}) <
          1e-12);

    // Quadratic formula oracle: roots of lambda^2 + 3 lambda + 2.
    const ComplexMatrix c{{0.0, 1.0}, {-2.0, -3.0}};
    const EigenResult ec = eig_general(c);
    CHECK(match_roots(ec.values, {Complex(-1.0, 0.0), Complex(-2.0, 0.0)}) < 1e-12);
    for (double r : ec.residuals) CHECK(r < 1e-12);

    // Nilpotent Jordan block: both eigenvalues zero, pair flagged defective.
    const ComplexMatrix jordan{{0.0, 1.0}, {0.0, 0.0}};
    const EigenResult ej = eig_general(jordan);
    CHECK(std::abs(ej.values[0]) < 1e-12);
    CHECK(std::abs(ej.values[1]) < 1e-12);
    CHECK((ej.defective[0] || ej.defective[1]));
}

TEST_CASE("eig_general recovers the roots of random polynomials") {
    Rng rng(29);
    for (int it = 0; it < 60; ++it) {
        const int degree = 2 + static_cast<int>(rng.uniform() * 5.0); // 2..6
        std::vector<Complex> roots(degree);
        for (Complex& r : roots) r = 2.0 * rng.complex_gaussian();
        // Expand prod (x - r_k) into monomial coefficients.
        std::vector<Complex> coeff{1.0};
        for (const Complex& r : roots) {
            std::vector<Complex> next(coeff.size() + 1, Complex{});
            for (std::size_t k = 0; k < coeff.size(); ++k) {
                next[k + 1] += coeff[k];
                next[k] -= coeff[k] * r;
            }
            coeff = std::move(next);
        }
        // Companion matrix of the monic polynomial.
        ComplexMatrix comp(degree, degree);
        for (int i = 1; i < degree; ++i) comp(i, i - 1) = 1.0;
        for (int i = 0; i < degree; ++i) comp(i, degree - 1) = -coeff[i];
        const EigenResult e = eig_general(comp);
        CHECK(match_roots(e.values, roots) < 1e-7);
    }
}

TEST_CASE("eig_general residuals on random dense matrices") {
    Rng rng(41);
    for (int n : {2, 4, 9, 16}) {
        for (int it = 0; it < (n >= 16 ? 10 : 40); ++it) {
            const ComplexMatrix m = rng.ginibre(n, n);
            const EigenResult e = eig_general(m);
            const double tol = 1e-8 * std::max(1.0, frobenius_norm(m));
            for (int k = 0; k < n; ++k) {
                CHECK(e.residuals[k] < tol);
                CHECK(!e.defective[k]);
                double vn = 0.0;
                for (int i = 0; i < n; ++i) vn += std::norm(e.vectors(i, k));
                CHECK(std::abs(std::sqrt(vn) - 1.0) < 1e-12);
            }
        }
    }
}

TEST_CASE("eig_general handles degenerate but diagonalizable spectra") {
    // diag(1, 1, 2) conjugated by a random unitary keeps independent vectors.
    Rng rng(47);
    const ComplexMatrix u = rng.haar_unitary(3);
    ComplexMatrix d(3, 3);
    d(0, 0) = 1.0;
    d(1, 1) = 1.0;
    d(2, 2) = 2.0;
    const ComplexMatrix m = u * d * adjoint(u);
    const EigenResult e = eig_general(m);
    CHECK(match_roots(e.values, {1.0, 1.0, 2.0}) < 1e-10);
    for (int k = 0; k < 3; ++k) CHECK(!e.defective[k]);
}
