#include <doctest.h>

#include <cmath>
#include <numbers>

#include "core/rfunctional.hpp"
#include "core/rng.hpp"
#include "core/witness.hpp"
#include "test_support.hpp"

using namespace rfunc;
using testsupport::ratio_of;

TEST_CASE("best_constants fixed values") {
    const BoundConstants g3 = best_constants(3, false);
    CHECK(g3.c_plus == doctest::Approx(1.20710678).epsilon(1e-8));
    CHECK(g3.c_minus == doctest::Approx(0.5 * (1.0 - std::numbers::sqrt2)).epsilon(1e-15));

    const BoundConstants t2 = best_constants(2, true);
    CHECK(t2.c_minus == 0.0);
    CHECK(t2.c_plus == 1.0);

    const BoundConstants t3 = best_constants(3, true);
    CHECK(t3.c_plus == doctest::Approx(0.5 * (1.0 + std::sqrt(4.0 / 3.0))).epsilon(1e-15));

    CHECK_THROWS_AS(best_constants(1, false), ContractError);
}

TEST_CASE("best_constants satisfy their defining quadratic equations") {
    for (int n = 2; n <= 8; ++n) {
        const BoundConstants g = best_constants(n, false);
        for (double c : {g.c_minus, g.c_plus}) {
            CHECK(std::abs(4.0 * c * (c - 1.0) - 1.0) < 1e-14);
        }
        if (n >= 3) {
            const BoundConstants t = best_constants(n, true);
            for (double c : {t.c_minus, t.c_plus}) {
                const double s = c + c / (n - 2);
                const double lhs = 4.0 * (s - 1.0) * s;
                const double rhs = std::pow(1.0 + 2.0 * c / (n - 2), 2);
                CHECK(std::abs(lhs - rhs) < 1e-13);
            }
        }
    }
}

TEST_CASE("traceless upper constants increase toward the unrestricted one") {
    double prev = best_constants(2, true).c_plus;
    const double cap = best_constants(2, false).c_plus;
    for (int n = 3; n <= 12; ++n) {
        const double cur = best_constants(n, true).c_plus;
        CHECK(cur > prev);
        CHECK(cur < cap);
        prev = cur;
    }
}

TEST_CASE("witness_general attains the n-independent constants") {
    for (int n : {2, 3, 5}) {
        const BoundConstants bc = best_constants(n, false);
        const auto [ua, ub] = witness_general(n, Sign::upper);
        CHECK(std::abs(ratio_of(ua, ub) - bc.c_plus) < 1e-13);
        const auto [la, lb] = witness_general(n, Sign::lower);
        CHECK(std::abs(ratio_of(la, lb) - bc.c_minus) < 1e-13);
    }
}

TEST_CASE("witness_traceless attains the size-dependent constants") {
    for (int n : {2, 3, 4, 6}) {
        const BoundConstants bc = best_constants(n, true);
        for (Sign sign : {Sign::upper, Sign::lower}) {
            const auto [a, b] = witness_traceless(n, sign);
            CHECK(std::abs(trace(a)) < 1e-13);
            const double target = sign == Sign::upper ? bc.c_plus : bc.c_minus;
            CHECK(std::abs(ratio_of(a, b) - target) < 1e-12);
        }
    }
    // Spot values evaluated from the closed forms.
    const auto [a3, b3] = witness_traceless(3, Sign::upper);
    CHECK(ratio_of(a3, b3) ==
          doctest::Approx(0.5 * (1.0 + std::sqrt(4.0 / 3.0))).epsilon(1e-13));
    const auto [a4, b4] = witness_traceless(4, Sign::lower);
    CHECK(ratio_of(a4, b4) ==
          doctest::Approx(0.5 * (1.0 - std::sqrt(3.0 / 2.0))).epsilon(1e-13));
}

TEST_CASE("witness_self reaches half the fourth power of the norm") {
    for (int n : {2, 3}) {
        const ComplexMatrix a = witness_self(n);
        CHECK(std::abs(r_self(a) - 0.5) < 1e-13);
    }
    CHECK(r_self(2.0 * witness_self(2)) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("pauli decomposition fixed values") {
    const PauliVector id = pauli_decompose(ComplexMatrix::identity(2));
    CHECK(std::abs(id.a0 - std::numbers::sqrt2) < 1e-15);
    for (const Complex& c : id.a) CHECK(std::abs(c) < 1e-15);

    const PauliVector z = pauli_decompose(testsupport::pauli(3));
    CHECK(std::abs(z.a0) < 1e-15);
    CHECK(std::abs(z.a[2] - std::numbers::sqrt2) < 1e-15);

    // Inner products with the basis elements: tr(F_mu A) for A = E01.
    const ComplexMatrix e01{{0.0, 1.0}, {0.0, 0.0}};
    const PauliVector p = pauli_decompose(e01);
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    CHECK(std::abs(p.a0) < 1e-15);
    CHECK(std::abs(p.a[0] - Complex(inv_sqrt2, 0.0)) < 1e-15);
    CHECK(std::abs(p.a[1] - Complex(0.0, inv_sqrt2)) < 1e-15);
    CHECK(std::abs(p.a[2]) < 1e-15);

    CHECK_THROWS_AS(pauli_decompose(ComplexMatrix(3, 3)), DimensionError);
}

TEST_CASE("pauli round trip, trace relation, and norm identity") {
    Rng rng(211);
    for (int it = 0; it < 10000; ++it) {
        const ComplexMatrix m = rng.ginibre(2, 2);
        const PauliVector p = pauli_decompose(m);
        CHECK(testsupport::max_abs_diff(pauli_reconstruct(p), m) < 1e-13);
        CHECK(std::abs(trace(m) - std::numbers::sqrt2 * p.a0) < 1e-13);
        const double coeff_norm =
            std::norm(p.a0) + std::norm(p.a[0]) + std::norm(p.a[1]) + std::norm(p.a[2]);
        CHECK(std::abs(coeff_norm - frobenius_norm_squared(m)) <
              1e-13 * std::max(1.0, coeff_norm));
    }
}

TEST_CASE("r_pauli special configurations") {
    // Parallel real vectors: r vanishes.
    PauliVector a, b;
    a.a = {0.6, -0.3, 1.1};
    b.a = {1.2, -0.6, 2.2};
    CHECK(std::abs(r_pauli(a, b)) < 1e-14);

    // Orthogonality conditions with zero scalar parts reach |a|^2 |b|^2.
    PauliVector u, v;
    u.a = {0.0, 0.0, 2.0};
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    v.a = {Complex(inv_sqrt2, 0.0), Complex(0.0, inv_sqrt2), 0.0};
    CHECK(r_pauli(u, v) == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("r_pauli agrees with r_eval on reconstructions") {
    Rng rng(223);
    for (int it = 0; it < 2000; ++it) {
        PauliVector a, b;
        a.a0 = rng.complex_gaussian();
        b.a0 = rng.complex_gaussian();
        for (int k = 0; k < 3; ++k) {
            a.a[k] = rng.complex_gaussian();
            b.a[k] = rng.complex_gaussian();
        }
        const double via_pauli = r_pauli(a, b);
        const double via_matrix = r_eval(pauli_reconstruct(a), pauli_reconstruct(b));
        CHECK(std::abs(via_pauli - via_matrix) < 1e-11 * std::max(1.0, std::abs(via_matrix)));
    }
}

TEST_CASE("witness_qubit attains both sharp constants") {
    const auto [ua, ub] = witness_qubit(Sign::upper);
    CHECK(std::abs(ratio_of(ua, ub) - 0.5 * (1.0 + std::numbers::sqrt2)) < 1e-12);
    const auto [la, lb] = witness_qubit(Sign::lower);
    CHECK(std::abs(ratio_of(la, lb) - 0.5 * (1.0 - std::numbers::sqrt2)) < 1e-12);
}

TEST_CASE("flipping the triple orientation loses attainment") {
    // Conjugating B by sigma_1 maps (b_R, b_I) to a right-handed triple with
    // the same a; the cross term flips sign and the ratio drops to 1/2.
    const auto [a, b] = witness_qubit(Sign::upper);
    const ComplexMatrix flipped = testsupport::pauli(1) * b * testsupport::pauli(1);
    const double ratio = ratio_of(a, flipped);
    CHECK(ratio == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ratio < 0.5 * (1.0 + std::numbers::sqrt2) - 0.1);
}

TEST_CASE("diagonal expansion identity for real diagonal A") {
    Rng rng(227);
    for (int n : {2, 3, 5}) {
        for (int it = 0; it < 100; ++it) {
            ComplexMatrix a(n, n);
            std::vector<double> diag(n);
            for (int i = 0; i < n; ++i) {
                diag[i] = rng.gaussian();
                a(i, i) = diag[i];
            }
            const ComplexMatrix b = rng.ginibre(n, n);
            double expansion = 0.0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    expansion += std::norm(b(j, i)) * (diag[i] * diag[i] - diag[i] * diag[j]);
                }
            CHECK(std::abs(r_eval(a, b) - expansion) <
                  1e-11 * std::max(1.0, std::abs(expansion)));
        }
    }
}
