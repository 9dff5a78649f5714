#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "errors.hpp"
#include "rfunctional.hpp"
#include "rng.hpp"
#include "witness.hpp"

namespace rfunc {

namespace {

double rel_err(double x, double y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

double ratio_of(const ComplexMatrix& a, const ComplexMatrix& b) {
    return r_eval(a, b) / (frobenius_norm_squared(a) * frobenius_norm_squared(b));
}

} // namespace

std::vector<PropertyResult> run_property_suite(int n, int samples, std::uint64_t seed) {
    if (n < 2 || n > 8) throw ContractError("run_property_suite: n must lie in [2, 8]");
    if (samples < 1) throw ContractError("run_property_suite: samples must be >= 1");

    Rng rng(seed);
    const BoundConstants general = best_constants(n, false);
    const BoundConstants traceless = best_constants(n, true);

    PropertyResult expressions{"expression_agreement", samples, 0.0, 1e-10, false};
    PropertyResult general_bounds{"general_ratio_bounds", samples, 0.0, 1e-10, false};
    PropertyResult traceless_bounds{"traceless_ratio_bounds", samples, 0.0, 1e-10, false};
    PropertyResult scaling{"quadratic_scaling", samples, 0.0, 1e-12, false};
    PropertyResult unitary{"unitary_invariance", samples, 0.0, 1e-11, false};
    PropertyResult additivity{"cartesian_additivity", samples, 0.0, 1e-11, false};
    PropertyResult normal_identity{"normal_b_commutator_identity", samples, 0.0, 1e-11, false};
    PropertyResult normal_bound{"normal_b_ratio_bound", samples, 0.0, 1e-10, false};
    PropertyResult self_range{"self_value_range", samples, 0.0, 1e-10, false};
    PropertyResult bw{"commutator_norm_bound", samples, 0.0, 1e-12, false};
    PropertyResult diag_expansion{"diagonal_expansion", samples, 0.0, 1e-11, false};
    PropertyResult witnesses{"witness_exactness", 0, 0.0, 1e-12, false};
    PropertyResult pauli_checks{"pauli_route_agreement", samples, 0.0, 1e-11, false};

    for (int it = 0; it < samples; ++it) {
        const ComplexMatrix a = rng.ginibre(n, n);
        const ComplexMatrix b = rng.ginibre(n, n);
        const double na2 = frobenius_norm_squared(a);
        const double nb2 = frobenius_norm_squared(b);
        const double hybrid = std::max(1.0, na2 * nb2);

        const RReport rep = r_report(a, b);
        expressions.max_violation =
            std::max(expressions.max_violation, rep.max_spread / hybrid);
        const double ratio = rep.value / (na2 * nb2);
        general_bounds.max_violation =
            std::max({general_bounds.max_violation, ratio - general.c_plus,
                      general.c_minus - ratio});

        // Traceless ensemble.
        const ComplexMatrix at = rng.ginibre_traceless(n);
        const double ratio_t = ratio_of(at, b);
        traceless_bounds.max_violation =
            std::max({traceless_bounds.max_violation, ratio_t - traceless.c_plus,
                      traceless.c_minus - ratio_t});

        // Scaling and invariances.
        const Complex alpha = rng.complex_gaussian();
        const Complex beta = rng.complex_gaussian();
        const auto [scaled, predicted] = scaling_check(a, b, alpha, beta);
        scaling.max_violation = std::max(scaling.max_violation, rel_err(scaled, predicted));

        const ComplexMatrix u = rng.haar_unitary(n);
        const auto [conjugated, plain] = unitary_invariance_check(a, b, u);
        unitary.max_violation = std::max(unitary.max_violation, rel_err(conjugated, plain));

        const auto parts = cartesian_additivity_check(a, b);
        additivity.max_violation =
            std::max(additivity.max_violation, rel_err(parts[0], parts[1] + parts[2]));

        // Normal-B ensemble rotating through Hermitian, unitary, diagonal.
        ComplexMatrix bn;
        if (it % 3 == 0) {
            bn = rng.hermitian(n);
        } else if (it % 3 == 1) {
            bn = rng.haar_unitary(n);
        } else {
            bn = ComplexMatrix(n, n);
            for (int i = 0; i < n; ++i) bn(i, i) = rng.complex_gaussian();
        }
        const double r_bn = r_eval(a, bn);
        const double half_comm = 0.5 * frobenius_norm_squared(commutator(a, bn));
        normal_identity.max_violation =
            std::max(normal_identity.max_violation, rel_err(r_bn, half_comm));
        const double nbn2 = frobenius_norm_squared(bn);
        if (nbn2 > 0.0) {
            normal_bound.max_violation =
                std::max(normal_bound.max_violation, r_bn / (na2 * nbn2) - 1.0);
        }

        const double rs = r_self(a);
        const double self_cap = 0.5 * na2 * na2;
        self_range.max_violation =
            std::max({self_range.max_violation, -rs / std::max(1.0, self_cap),
                      (rs - self_cap) / std::max(1.0, self_cap)});

        const auto [bw_lhs, bw_rhs] = bw_check(a, b);
        bw.max_violation =
            std::max(bw.max_violation, (bw_lhs - bw_rhs) / std::max(1.0, bw_rhs));

        // Real-diagonal A against the explicit expansion
        // sum_{i != j} |b_ji|^2 (a_i^2 - a_i a_j).
        ComplexMatrix ad(n, n);
        std::vector<double> diag(n);
        for (int i = 0; i < n; ++i) {
            diag[i] = rng.gaussian();
            ad(i, i) = diag[i];
        }
        double expansion = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (i == j) continue;
                expansion += std::norm(b(j, i)) * (diag[i] * diag[i] - diag[i] * diag[j]);
            }
        diag_expansion.max_violation =
            std::max(diag_expansion.max_violation, rel_err(r_eval(ad, b), expansion));

        if (n == 2) {
            const PauliVector pa = pauli_decompose(a);
            const PauliVector pb = pauli_decompose(b);
            pauli_checks.max_violation = std::max(
                pauli_checks.max_violation,
                std::max(rel_err(r_pauli(pa, pb), r_eval(a, b)),
                         frobenius_norm(pauli_reconstruct(pa) - a)));
        }
    }

    // Closed-form witnesses against their target constants.
    for (Sign sign : {Sign::upper, Sign::lower}) {
        const double target_g =
            (sign == Sign::upper) ? general.c_plus : general.c_minus;
        const auto [ga, gb] = witness_general(n, sign);
        witnesses.max_violation =
            std::max(witnesses.max_violation, std::abs(ratio_of(ga, gb) - target_g));

        const double target_t =
            (sign == Sign::upper) ? traceless.c_plus : traceless.c_minus;
        const auto [ta, tb] = witness_traceless(n, sign);
        witnesses.max_violation =
            std::max(witnesses.max_violation, std::abs(ratio_of(ta, tb) - target_t));

        if (n == 2) {
            const double target_q =
                (sign == Sign::upper) ? general.c_plus : general.c_minus;
            const auto [qa, qb] = witness_qubit(sign);
            witnesses.max_violation =
                std::max(witnesses.max_violation, std::abs(ratio_of(qa, qb) - target_q));
        }
    }
    const ComplexMatrix self = witness_self(n);
    witnesses.max_violation =
        std::max(witnesses.max_violation, std::abs(r_self(self) - 0.5));

    std::vector<PropertyResult> results{expressions,     general_bounds, traceless_bounds,
                                        scaling,         unitary,        additivity,
                                        normal_identity, normal_bound,   self_range,
                                        bw,              diag_expansion, witnesses};
    if (n == 2) results.push_back(pauli_checks);
    for (PropertyResult& r : results) r.pass = r.max_violation <= r.tolerance;
    return results;
}

} // namespace rfunc
