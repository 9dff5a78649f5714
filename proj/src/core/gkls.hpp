#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "complex_matrix.hpp"

namespace rfunc {

/// Generator of a completely positive trace-preserving semigroup in GKLS
/// form: L(rho) = -i[H, rho] + sum_k (L_k rho L_k^+ - {L_k^+ L_k, rho}/2).
/// H is Hermitian; jump operators are stored traceless (the trace part of a
/// jump only shifts the Hamiltonian, which never enters the rate checks, so
/// it is stripped at construction and H is left as given).
struct GklsGenerator {
    int n = 0;
    ComplexMatrix hamiltonian;
    std::vector<ComplexMatrix> jumps;
};

/// Validates shapes, Hermiticity of H, and strips jump traces.
GklsGenerator make_generator(const ComplexMatrix& hamiltonian,
                             std::vector<ComplexMatrix> jumps);

/// H = (G + G^+)/2 from a Ginibre draw; each jump is a Ginibre draw minus
/// its trace part, normalized to unit Frobenius norm. Deterministic per seed.
GklsGenerator random_generator(int n, int num_jumps, std::uint64_t seed);

/// n^2 x n^2 matrix of the generator under column-stacking vectorization:
/// -i(I kron H - H^T kron I)
///   + sum_k (conj(L) kron L - I kron (L^+L)/2 - (L^+L)^T kron I / 2).
ComplexMatrix build_superoperator(const GklsGenerator& gen);

struct SpectralResult {
    std::vector<Complex> eigenvalues;          // all n^2, sorted by (Re, Im)
    std::vector<ComplexMatrix> eigenmatrices;  // unit Frobenius norm
    std::vector<double> eigen_residuals;
    std::vector<bool> defective;
    int zero_index = -1;             // the structural zero eigenvalue
    std::vector<double> rates;       // n^2 - 1 values, sorted descending
    double scale = 1.0;              // max(1, ||superoperator||)
    double conjugation_residual = 0; // eigenvalue multiset vs its conjugate
    double max_trace_residual = 0;   // max |tr u| over usable nonzero modes
};

/// Spectrum of the superoperator with eigenvectors reshaped to matrices.
/// Exactly one eigenvalue is identified as the structural zero (smallest
/// modulus; it must lie below 1e-9 * scale or an InternalError signals a
/// broken builder). Relaxation rates are -Re(lambda) of the remaining ones.
SpectralResult spectrum(const GklsGenerator& gen);

struct IdentityCheckEntry {
    int index = 0;            // position in SpectralResult::eigenvalues
    bool checked = false;
    std::string skip_reason;  // "structural_zero" | "near_zero" | "defective"
    double rate = 0.0;        // -Re(lambda)
    double r_sum = 0.0;       // sum_k r(u, L_k)
    double abs_error = 0.0;
    double residual = 0.0;    // eigenpair residual
};

/// Checks rate = sum_k r(u, L_k) for every usable eigenpair with a nonzero
/// eigenvalue; defective pairs are reported as skipped, never thrown.
std::vector<IdentityCheckEntry> relaxation_identity_check(const GklsGenerator& gen);
std::vector<IdentityCheckEntry> relaxation_identity_check(const GklsGenerator& gen,
                                                          const SpectralResult& spec);

/// Returns (sum of rates, n * sum_k ||L_k||^2); equal for traceless jumps.
std::pair<double, double> sum_rule_check(const GklsGenerator& gen);

enum class AuditMode { theorem5_traceless, theorem5_general, sqrt2_legacy };

AuditMode audit_mode_from_string(const std::string& name);
std::string audit_mode_name(AuditMode mode);

/// Per-mode constant in max(rate) <= constant * sum(rates):
/// (1 + sqrt(2(1-1/n)))/(2n), (1 + sqrt(2))/(2n), or sqrt(2)/n.
/// The three are strictly increasing in that order for every n >= 2.
double audit_constant(AuditMode mode, int n);

struct TimeRelation {
    bool applicable = false; // n = 2 with the two smaller rates equal
    bool holds = false;      // transverse time <= 2 * longitudinal time
    bool saturated = false;  // equality within tolerance
    double longitudinal_time = 0.0;
    double transverse_time = 0.0;
};

struct AuditRecord {
    std::string id;
    int n = 0;
    AuditMode mode = AuditMode::theorem5_traceless;
    std::vector<double> rates;
    double sum_rates = 0.0;
    double bound_constant = 0.0;
    double max_rate = 0.0;
    double margin = 0.0; // bound * sum - max
    bool pass = false;   // margin >= -1e-9 * sum
    TimeRelation time_relation;
};

AuditRecord constraint_audit(const GklsGenerator& gen, AuditMode mode,
                             const std::string& id = "");
AuditRecord constraint_audit(const SpectralResult& spec, int n, AuditMode mode,
                             const std::string& id = "");

} // namespace rfunc
