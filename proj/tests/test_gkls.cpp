#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "core/gkls.hpp"
#include "core/rfunctional.hpp"
#include "core/rng.hpp"
#include "test_support.hpp"

using namespace rfunc;
using testsupport::pauli;

namespace {

GklsGenerator amplitude_damping() {
    ComplexMatrix jump(2, 2);
    jump(0, 1) = 1.0;
    return make_generator(ComplexMatrix(2, 2), {jump});
}

GklsGenerator dephasing() {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    return make_generator(ComplexMatrix(2, 2), {inv_sqrt2 * pauli(3)});
}

double match_value(const std::vector<Complex>& values, Complex target) {
    double best = std::numeric_limits<double>::infinity();
    for (const Complex& v : values) best = std::min(best, std::abs(v - target));
    return best;
}

} // namespace

TEST_CASE("make_generator validates and strips jump traces") {
    ComplexMatrix bad{{0.0, 1.0}, {0.0, 0.0}};
    CHECK_THROWS_AS(make_generator(bad, {}), ContractError);

    ComplexMatrix traced = ComplexMatrix::identity(2);
    traced(0, 1) = 0.5;
    const GklsGenerator gen = make_generator(ComplexMatrix(2, 2), {traced});
    CHECK(std::abs(trace(gen.jumps[0])) < 1e-13);
    CHECK(std::abs(gen.jumps[0](0, 1) - Complex(0.5, 0.0)) < 1e-15);
}

TEST_CASE("superoperator of the empty generator is zero") {
    const GklsGenerator gen = make_generator(ComplexMatrix(3, 3), {});
    CHECK(frobenius_norm(build_superoperator(gen)) == 0.0);
}

TEST_CASE("superoperator of amplitude damping matches the hand-built matrix") {
    const GklsGenerator gen = amplitude_damping();
    const ComplexMatrix super = build_superoperator(gen);

    // Definition oracle: with L = E01 (column-stacking order 00,10,01,11)
    // the only terms are conj(L) kron L at (0,3) and the diagonal
    // -(I kron L+L + (L+L)^T kron I)/2 = -diag(0, 1/2, 1/2, 1).
    ComplexMatrix expected(4, 4);
    expected(0, 3) = 1.0;
    expected(1, 1) = -0.5;
    expected(2, 2) = -0.5;
    expected(3, 3) = -1.0;
    CHECK(testsupport::max_abs_diff(super, expected) < 1e-15);
}

TEST_CASE("trace preservation: vec(I) is a left null vector") {
    Rng rng(401);
    for (int it = 0; it < 20; ++it) {
        const GklsGenerator gen = random_generator(3, 2, rng.next_u64());
        const ComplexMatrix super = build_superoperator(gen);
        const std::vector<Complex> left = vec(ComplexMatrix::identity(3));
        double worst = 0.0;
        for (int c = 0; c < 9; ++c) {
            Complex acc{};
            for (int r = 0; r < 9; ++r) acc += std::conj(left[r]) * super(r, c);
            worst = std::max(worst, std::abs(acc));
        }
        CHECK(worst < 1e-12 * std::max(1.0, frobenius_norm(super)));
    }
}

TEST_CASE("unitary generator has purely imaginary spectrum") {
    const GklsGenerator gen = make_generator(0.5 * pauli(3), {});
    const SpectralResult spec = spectrum(gen);
    CHECK(match_value(spec.eigenvalues, Complex(0.0, 0.0)) < 1e-12);
    CHECK(match_value(spec.eigenvalues, Complex(0.0, 1.0)) < 1e-12);
    CHECK(match_value(spec.eigenvalues, Complex(0.0, -1.0)) < 1e-12);
    for (double rate : spec.rates) CHECK(std::abs(rate) < 1e-12);
}

TEST_CASE("amplitude damping rates and structural zero") {
    const SpectralResult spec = spectrum(amplitude_damping());
    REQUIRE(spec.rates.size() == 3);
    CHECK(spec.rates[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spec.rates[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spec.rates[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(spec.zero_index >= 0);
    CHECK(std::abs(spec.eigenvalues[spec.zero_index]) < 1e-9 * spec.scale);
    CHECK(spec.conjugation_residual < 1e-9 * spec.scale);
}

TEST_CASE("dephasing rates include a zero mode beyond the structural one") {
    const SpectralResult spec = spectrum(dephasing());
    REQUIRE(spec.rates.size() == 3);
    CHECK(spec.rates[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spec.rates[1] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(spec.rates[2]) < 1e-12);
}

TEST_CASE("relaxation identity on fixed and random generators") {
    for (const IdentityCheckEntry& e : relaxation_identity_check(amplitude_damping())) {
        if (!e.checked) continue;
        CHECK(e.abs_error < 1e-8 * std::max(1.0, e.rate));
    }

    Rng rng(409);
    for (int it = 0; it < 25; ++it) {
        const GklsGenerator gen = random_generator(3, 2, rng.next_u64());
        int checked = 0;
        for (const IdentityCheckEntry& e : relaxation_identity_check(gen)) {
            if (!e.checked) continue;
            ++checked;
            CHECK(e.abs_error < 1e-8 * std::max(1.0, e.rate));
        }
        CHECK(checked >= 7); // most of the 8 nonzero modes are usable
    }

    // Unitary-only generator: both sides vanish for every usable mode.
    const GklsGenerator unitary = make_generator(0.5 * pauli(3), {});
    for (const IdentityCheckEntry& e : relaxation_identity_check(unitary)) {
        if (!e.checked) continue;
        CHECK(std::abs(e.rate) < 1e-10);
        CHECK(std::abs(e.r_sum) < 1e-10);
    }
}

TEST_CASE("trace of usable nonzero eigenmatrices vanishes") {
    Rng rng(419);
    for (int n : {2, 3}) {
        for (int it = 0; it < 10; ++it) {
            const SpectralResult spec = spectrum(random_generator(n, 2, rng.next_u64()));
            CHECK(spec.max_trace_residual < 1e-8);
        }
    }
}

TEST_CASE("sum rule on fixed generators") {
    const auto [ad_lhs, ad_rhs] = sum_rule_check(amplitude_damping());
    CHECK(ad_lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(ad_rhs == doctest::Approx(2.0).epsilon(1e-12));

    const auto [dp_lhs, dp_rhs] = sum_rule_check(dephasing());
    CHECK(dp_lhs == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(dp_rhs == doctest::Approx(2.0).epsilon(1e-12));

    const auto [un_lhs, un_rhs] = sum_rule_check(make_generator(0.5 * pauli(3), {}));
    CHECK(std::abs(un_lhs) < 1e-12);
    CHECK(un_rhs == 0.0);
}

TEST_CASE("sum rule on random generators") {
    Rng rng(421);
    for (int n : {2, 3, 4}) {
        for (int it = 0; it < 15; ++it) {
            const GklsGenerator gen = random_generator(n, 1 + it % 3, rng.next_u64());
            const auto [lhs, rhs] = sum_rule_check(gen);
            CHECK(std::abs(lhs - rhs) < 1e-8 * std::max(1.0, rhs));
            CHECK(rhs == doctest::Approx(static_cast<double>(n * (1 + it % 3))).epsilon(1e-12));
        }
    }
}

TEST_CASE("audit constants are strictly ordered for every level count") {
    for (int n = 2; n <= 16; ++n) {
        const double tight = audit_constant(AuditMode::theorem5_traceless, n);
        const double general = audit_constant(AuditMode::theorem5_general, n);
        const double legacy = audit_constant(AuditMode::sqrt2_legacy, n);
        CHECK(tight < general);
        CHECK(general < legacy);
    }
    CHECK(audit_constant(AuditMode::theorem5_traceless, 2) == doctest::Approx(0.5));
}

TEST_CASE("amplitude damping saturates the qubit audit with zero margin") {
    const AuditRecord rec =
        constraint_audit(amplitude_damping(), AuditMode::theorem5_traceless, "ad");
    CHECK(rec.bound_constant == doctest::Approx(0.5));
    CHECK(rec.max_rate == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rec.sum_rates == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(rec.margin) < 1e-9);
    CHECK(rec.pass);
    CHECK(rec.time_relation.applicable);
    CHECK(rec.time_relation.holds);
    CHECK(rec.time_relation.saturated);
    CHECK(rec.time_relation.transverse_time ==
          doctest::Approx(2.0 * rec.time_relation.longitudinal_time).epsilon(1e-9));
}

TEST_CASE("legacy margins dominate the tighter modes") {
    Rng rng(431);
    for (int it = 0; it < 20; ++it) {
        const GklsGenerator gen = random_generator(3, 2, rng.next_u64());
        const SpectralResult spec = spectrum(gen);
        const AuditRecord tight = constraint_audit(spec, 3, AuditMode::theorem5_traceless);
        const AuditRecord general = constraint_audit(spec, 3, AuditMode::theorem5_general);
        const AuditRecord legacy = constraint_audit(spec, 3, AuditMode::sqrt2_legacy);
        CHECK(tight.pass);
        CHECK(general.margin >= tight.margin);
        CHECK(legacy.margin >= general.margin);
    }
}

TEST_CASE("random_generator is deterministic and respects its contract") {
    const GklsGenerator g1 = random_generator(3, 2, 777);
    const GklsGenerator g2 = random_generator(3, 2, 777);
    CHECK(testsupport::max_abs_diff(g1.hamiltonian, g2.hamiltonian) == 0.0);
    for (int k = 0; k < 2; ++k) {
        CHECK(testsupport::max_abs_diff(g1.jumps[k], g2.jumps[k]) == 0.0);
        CHECK(std::abs(frobenius_norm(g1.jumps[k]) - 1.0) < 1e-12);
        CHECK(std::abs(trace(g1.jumps[k])) < 1e-13);
    }
    CHECK(is_hermitian(g1.hamiltonian));

    // No jumps: unitary evolution with vanishing rates.
    const SpectralResult spec = spectrum(random_generator(3, 0, 5));
    for (double rate : spec.rates) CHECK(std::abs(rate) < 1e-9 * spec.scale);
}

TEST_CASE("rates are nonnegative and spectra conjugation-closed on random draws") {
    Rng rng(433);
    for (int n : {2, 3, 4}) {
        for (int it = 0; it < 15; ++it) {
            const SpectralResult spec =
                spectrum(random_generator(n, 1 + it % 3, rng.next_u64()));
            for (double rate : spec.rates) CHECK(rate > -1e-9 * spec.scale);
            CHECK(spec.conjugation_residual < 1e-9 * spec.scale);
        }
    }
}
