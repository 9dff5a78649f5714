#include "rfunctional.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace rfunc {

namespace {

void require_pair(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    require_square(a, op);
    require_same_shape(a, b, op);
    require_finite(a, op);
    require_finite(b, op);
}

double discard_imag(Complex z, double scale, const char* where) {
    if (std::abs(z.imag()) > 1e-12 * scale) {
        throw InternalError(std::string(where) + ": imaginary residue " +
                            std::to_string(z.imag()) + " exceeds tolerance");
    }
    return z.real();
}

} // namespace

double r_eval(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_pair(a, b, "r_eval");
    const ComplexMatrix ad = adjoint(a);
    const ComplexMatrix bd = adjoint(b);
    const ComplexMatrix ada = ad * a;
    const ComplexMatrix aad = a * ad;
    const ComplexMatrix bdb = bd * b;

    const Complex t1 = trace_product(ada, bdb);
    const Complex t2 = trace_product(aad, bdb);
    const Complex t3 = trace_product(ad * b, a * bd);
    const Complex t4 = trace_product(b * ad, bd * a);
    const Complex value = 0.5 * (t1 + t2 - t3 - t4);

    const double scale =
        std::max(1.0, frobenius_norm_squared(a) * frobenius_norm_squared(b));
    return discard_imag(value, scale, "r_eval");
}

RReport r_report(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_pair(a, b, "r_report");
    const ComplexMatrix ad = adjoint(a);
    const ComplexMatrix bd = adjoint(b);
    const ComplexMatrix ab = a * b;
    const ComplexMatrix ba = b * a;
    const ComplexMatrix ada = ad * a;
    const ComplexMatrix aad = a * ad;
    const ComplexMatrix bdb = bd * b;
    const ComplexMatrix comm_bd_b = bd * b - b * bd; // [B+, B]
    const ComplexMatrix anti_a_ad = aad + ada;       // {A, A+}

    const double na2 = frobenius_norm_squared(a);
    const double nb2 = frobenius_norm_squared(b);
    const double scale = std::max(1.0, na2 * nb2);

    RReport rep;
    auto put = [&](RAlternate which, Complex z) {
        rep.alternates[which] = discard_imag(z, scale, "r_report");
    };

    // eq1: definition with two Hilbert-Schmidt inner products.
    put(kAltDefinition, 0.5 * (hs_inner(ba - ab, ba) +
                               hs_inner(b * ad - ad * b, b * ad)));
    // eq9: expanded traces.
    const Complex t3 = trace_product(ad * b, a * bd);
    const Complex t4 = trace_product(b * ad, bd * a);
    put(kAltExpandedTrace,
        0.5 * (trace_product(ada, bdb) + trace_product(aad, bdb) - t3 - t4));
    // eq10: anticommutator minus real cross trace.
    put(kAltAnticommutator, 0.5 * trace_product(anti_a_ad, bdb) -
                                Complex(trace_product(ad * b, a * bd).real(), 0.0));
    // eq11..eq14: commutator-norm forms.
    put(kAltCommutatorAB,
        0.5 * (frobenius_norm_squared(ab - ba) + trace_product(ada, comm_bd_b)));
    put(kAltCommutatorAdBd,
        0.5 * (frobenius_norm_squared(ad * bd - bd * ad) + trace_product(ada, comm_bd_b)));
    put(kAltCommutatorABd,
        0.5 * (frobenius_norm_squared(a * bd - bd * a) + trace_product(aad, comm_bd_b)));
    put(kAltCommutatorAdB,
        0.5 * (frobenius_norm_squared(ad * b - b * ad) + trace_product(aad, comm_bd_b)));
    // eq15: symmetrized quarter-weight form.
    put(kAltSymmetrized,
        0.25 * (frobenius_norm_squared(ab - ba) + frobenius_norm_squared(ad * b - b * ad) +
                trace_product(anti_a_ad, comm_bd_b)));

    rep.value = rep.alternates[kAltExpandedTrace];
    const auto [lo, hi] = std::minmax_element(rep.alternates.begin(), rep.alternates.end());
    rep.max_spread = *hi - *lo;
    if (na2 > 0.0 && nb2 > 0.0) rep.ratio = rep.value / (na2 * nb2);
    return rep;
}

double r_self(const ComplexMatrix& a) {
    require_square(a, "r_self");
    require_finite(a, "r_self");
    const ComplexMatrix ad = adjoint(a);
    const ComplexMatrix ada = ad * a;
    const Complex value = 0.5 * trace_product(ada, ada - a * ad);
    const double n2 = frobenius_norm_squared(a);
    return discard_imag(value, std::max(1.0, n2 * n2), "r_self");
}

std::pair<double, double> scaling_check(const ComplexMatrix& a, const ComplexMatrix& b,
                                        Complex alpha, Complex beta) {
    const double base = r_eval(a, b);
    const double scaled = r_eval(alpha * a, beta * b);
    return {scaled, std::norm(alpha) * std::norm(beta) * base};
}

std::pair<double, double> unitary_invariance_check(const ComplexMatrix& a,
                                                   const ComplexMatrix& b,
                                                   const ComplexMatrix& u) {
    require_square(u, "unitary_invariance_check");
    require_same_shape(a, u, "unitary_invariance_check");
    if (!is_unitary(u, 1e-12)) {
        throw ContractError("unitary_invariance_check: conjugator is not unitary");
    }
    const ComplexMatrix ud = adjoint(u);
    return {r_eval(u * a * ud, u * b * ud), r_eval(a, b)};
}

std::array<double, 3> cartesian_additivity_check(const ComplexMatrix& a,
                                                 const ComplexMatrix& b) {
    const CartesianParts parts = cartesian_split(a);
    return {r_eval(a, b), r_eval(parts.real_part, b), r_eval(parts.imag_part, b)};
}

std::pair<double, double> bw_check(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_pair(a, b, "bw_check");
    const double lhs = frobenius_norm_squared(commutator(a, b));
    const double rhs = 2.0 * frobenius_norm_squared(a) * frobenius_norm_squared(b);
    return {lhs, rhs};
}

std::pair<double, double> sqrt2_bound_check(const ComplexMatrix& a, const ComplexMatrix& b) {
    const double r = r_eval(a, b);
    const double bound =
        std::sqrt(2.0) * frobenius_norm_squared(a) * frobenius_norm_squared(b);
    return {r, bound};
}

} // namespace rfunc
