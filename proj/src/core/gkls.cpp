#include "gkls.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "eigen.hpp"
#include "errors.hpp"
#include "rfunctional.hpp"
#include "rng.hpp"

namespace rfunc {

namespace {

constexpr double kZeroTol = 1e-9;

ComplexMatrix strip_trace(const ComplexMatrix& m) {
    ComplexMatrix out = m;
    const Complex shift = trace(m) / static_cast<double>(m.rows());
    for (int i = 0; i < m.rows(); ++i) out(i, i) -= shift;
    return out;
}

} // namespace

GklsGenerator make_generator(const ComplexMatrix& hamiltonian,
                             std::vector<ComplexMatrix> jumps) {
    require_square(hamiltonian, "make_generator");
    require_finite(hamiltonian, "make_generator");
    const int n = hamiltonian.rows();
    if (n < 2) throw ContractError("make_generator: level count must be at least 2");
    if (frobenius_norm(hamiltonian - adjoint(hamiltonian)) >
        1e-12 * std::max(1.0, frobenius_norm(hamiltonian))) {
        throw ContractError("make_generator: Hamiltonian is not Hermitian within tolerance");
    }
    GklsGenerator gen;
    gen.n = n;
    gen.hamiltonian = hamiltonian;
    gen.jumps.reserve(jumps.size());
    for (ComplexMatrix& jump : jumps) {
        require_same_shape(hamiltonian, jump, "make_generator");
        require_finite(jump, "make_generator");
        gen.jumps.push_back(strip_trace(jump));
    }
    return gen;
}

GklsGenerator random_generator(int n, int num_jumps, std::uint64_t seed) {
    if (n < 2) throw ContractError("random_generator: level count must be at least 2");
    if (num_jumps < 0) throw ContractError("random_generator: num_jumps must be >= 0");
    Rng rng(seed);
    GklsGenerator gen;
    gen.n = n;
    gen.hamiltonian = rng.hermitian(n);
    gen.jumps.reserve(num_jumps);
    for (int k = 0; k < num_jumps; ++k) {
        ComplexMatrix jump = strip_trace(rng.ginibre(n, n));
        const double norm = frobenius_norm(jump);
        if (norm > 0.0) jump *= Complex(1.0 / norm, 0.0);
        gen.jumps.push_back(std::move(jump));
    }
    return gen;
}

ComplexMatrix build_superoperator(const GklsGenerator& gen) {
    const int n = gen.n;
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const Complex minus_i(0.0, -1.0);
    ComplexMatrix super =
        minus_i * (kron(eye, gen.hamiltonian) - kron(transpose(gen.hamiltonian), eye));
    for (const ComplexMatrix& jump : gen.jumps) {
        const ComplexMatrix jj = adjoint(jump) * jump;
        super += kron(conjugate(jump), jump);
        super -= 0.5 * kron(eye, jj);
        super -= 0.5 * kron(transpose(jj), eye);
    }
    return super;
}

SpectralResult spectrum(const GklsGenerator& gen) {
    const ComplexMatrix super = build_superoperator(gen);
    const int dim = super.rows();
    const int n = gen.n;

    SpectralResult out;
    out.scale = std::max(1.0, frobenius_norm(super));
    const EigenResult eig = eig_general(super);
    out.eigenvalues = eig.values;
    out.eigen_residuals = eig.residuals;
    out.defective = eig.defective;
    out.eigenmatrices.reserve(dim);
    for (int k = 0; k < dim; ++k) {
        std::vector<Complex> column(dim);
        for (int i = 0; i < dim; ++i) column[i] = eig.vectors(i, k);
        out.eigenmatrices.push_back(unvec(column, n, n)); // eigenvector is unit norm
    }

    int zero = 0;
    for (int k = 1; k < dim; ++k) {
        if (std::abs(out.eigenvalues[k]) < std::abs(out.eigenvalues[zero])) zero = k;
    }
    if (std::abs(out.eigenvalues[zero]) >= kZeroTol * out.scale) {
        throw InternalError("spectrum: no eigenvalue within the structural-zero threshold");
    }
    out.zero_index = zero;

    out.rates.reserve(dim - 1);
    for (int k = 0; k < dim; ++k) {
        if (k == zero) continue;
        out.rates.push_back(-out.eigenvalues[k].real());
    }
    std::sort(out.rates.begin(), out.rates.end(), std::greater<double>());

    // Hermiticity preservation closes the spectrum under conjugation.
    double worst_conj = 0.0;
    for (int k = 0; k < dim; ++k) {
        const Complex target = std::conj(out.eigenvalues[k]);
        double best = std::numeric_limits<double>::infinity();
        for (int j = 0; j < dim; ++j) best = std::min(best, std::abs(out.eigenvalues[j] - target));
        worst_conj = std::max(worst_conj, best);
    }
    out.conjugation_residual = worst_conj;

    double worst_trace = 0.0;
    for (int k = 0; k < dim; ++k) {
        if (k == zero || out.defective[k]) continue;
        if (std::abs(out.eigenvalues[k]) < kZeroTol * out.scale) continue;
        worst_trace = std::max(worst_trace, std::abs(trace(out.eigenmatrices[k])));
    }
    out.max_trace_residual = worst_trace;
    return out;
}

std::vector<IdentityCheckEntry> relaxation_identity_check(const GklsGenerator& gen) {
    return relaxation_identity_check(gen, spectrum(gen));
}

std::vector<IdentityCheckEntry> relaxation_identity_check(const GklsGenerator& gen,
                                                          const SpectralResult& spec) {
    std::vector<IdentityCheckEntry> entries;
    entries.reserve(spec.eigenvalues.size());
    for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        IdentityCheckEntry e;
        e.index = static_cast<int>(k);
        e.residual = spec.eigen_residuals[k];
        e.rate = -spec.eigenvalues[k].real();
        if (static_cast<int>(k) == spec.zero_index) {
            e.skip_reason = "structural_zero";
        } else if (std::abs(spec.eigenvalues[k]) < kZeroTol * spec.scale) {
            e.skip_reason = "near_zero";
        } else if (spec.defective[k]) {
            e.skip_reason = "defective";
        } else {
            e.checked = true;
            double sum = 0.0;
            for (const ComplexMatrix& jump : gen.jumps) {
                sum += r_eval(spec.eigenmatrices[k], jump);
            }
            e.r_sum = sum;
            e.abs_error = std::abs(e.rate - sum);
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

std::pair<double, double> sum_rule_check(const GklsGenerator& gen) {
    const SpectralResult spec = spectrum(gen);
    double lhs = 0.0;
    for (double rate : spec.rates) lhs += rate;
    double rhs = 0.0;
    for (const ComplexMatrix& jump : gen.jumps) rhs += frobenius_norm_squared(jump);
    rhs *= gen.n;
    return {lhs, rhs};
}

AuditMode audit_mode_from_string(const std::string& name) {
    if (name == "theorem5_traceless") return AuditMode::theorem5_traceless;
    if (name == "theorem5_general") return AuditMode::theorem5_general;
    if (name == "sqrt2_legacy") return AuditMode::sqrt2_legacy;
    throw ContractError("unknown audit mode: " + name);
}

std::string audit_mode_name(AuditMode mode) {
    switch (mode) {
        case AuditMode::theorem5_traceless: return "theorem5_traceless";
        case AuditMode::theorem5_general: return "theorem5_general";
        case AuditMode::sqrt2_legacy: return "sqrt2_legacy";
    }
    throw InternalError("unreachable audit mode");
}

double audit_constant(AuditMode mode, int n) {
    if (n < 2) throw ContractError("audit_constant: level count must be at least 2");
    switch (mode) {
        case AuditMode::theorem5_traceless:
            return (1.0 + std::sqrt(2.0 * (1.0 - 1.0 / n))) / (2.0 * n);
        case AuditMode::theorem5_general:
            return (1.0 + std::sqrt(2.0)) / (2.0 * n);
        case AuditMode::sqrt2_legacy:
            return std::sqrt(2.0) / n;
    }
    throw InternalError("unreachable audit mode");
}

AuditRecord constraint_audit(const GklsGenerator& gen, AuditMode mode, const std::string& id) {
    return constraint_audit(spectrum(gen), gen.n, mode, id);
}

AuditRecord constraint_audit(const SpectralResult& spec, int n, AuditMode mode,
                             const std::string& id) {
    AuditRecord rec;
    rec.id = id;
    rec.n = n;
    rec.mode = mode;
    rec.rates = spec.rates;
    for (double rate : rec.rates) rec.sum_rates += rate;
    rec.bound_constant = audit_constant(mode, n);
    rec.max_rate = rec.rates.empty() ? 0.0 : rec.rates.front();
    rec.margin = rec.bound_constant * rec.sum_rates - rec.max_rate;
    rec.pass = rec.margin >= -kZeroTol * rec.sum_rates;

    if (n == 2 && rec.rates.size() == 3) {
        const double tol = kZeroTol * std::max(1.0, rec.sum_rates);
        if (std::abs(rec.rates[1] - rec.rates[2]) <= tol && rec.rates[1] > tol) {
            TimeRelation& tr = rec.time_relation;
            tr.applicable = true;
            tr.longitudinal_time = rec.rates[0] > 0.0 ? 1.0 / rec.rates[0] : 0.0;
            tr.transverse_time = 1.0 / rec.rates[1];
            // max rate <= sum of the paired rates, i.e. T_transverse <= 2 T_longitudinal.
            tr.holds = rec.rates[0] <= rec.rates[1] + rec.rates[2] + tol;
            tr.saturated = std::abs(rec.rates[0] - (rec.rates[1] + rec.rates[2])) <= tol;
        }
    }
    return rec;
}

} // namespace rfunc
