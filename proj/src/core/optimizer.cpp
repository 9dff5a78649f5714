#include "optimizer.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "eigen.hpp"
#include "errors.hpp"
#include "rfunctional.hpp"
#include "rng.hpp"
#include "witness.hpp"

namespace rfunc {

namespace {

ComplexMatrix hermitize(const ComplexMatrix& m) { return 0.5 * (m + adjoint(m)); }

ComplexMatrix normalized(const ComplexMatrix& m) {
    const double norm = frobenius_norm(m);
    if (norm == 0.0) throw InternalError("cannot normalize a zero matrix");
    return (1.0 / norm) * m;
}

/// Extreme unit eigenvector of a Hermitian form: last column for maximize,
/// first for minimize (values ascend). Ties are broken by whichever vector
/// the solver returns first; only the value enters the contract.
std::vector<Complex> extreme_eigenvector(const ComplexMatrix& form, bool maximize,
                                         double* value) {
    const EigenResult eig = eig_hermitian(form);
    const int col = maximize ? form.rows() - 1 : 0;
    if (value) *value = eig.values[col].real();
    std::vector<Complex> v(form.rows());
    for (int i = 0; i < form.rows(); ++i) v[i] = eig.vectors(i, col);
    return v;
}

} // namespace

ComplexMatrix quad_form_in_B(const ComplexMatrix& a) {
    require_square(a, "quad_form_in_B");
    const int n = a.rows();
    const ComplexMatrix ad = adjoint(a);
    ComplexMatrix m = kron(ComplexMatrix::identity(n), 0.5 * (a * ad + ad * a));
    m -= 0.5 * kron(transpose(a), ad);
    m -= 0.5 * kron(conjugate(a), a);
    return hermitize(m);
}

std::vector<ComplexMatrix> traceless_basis(int n) {
    std::vector<ComplexMatrix> basis;
    basis.reserve(static_cast<std::size_t>(n) * n - 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            ComplexMatrix e(n, n);
            e(i, j) = 1.0;
            basis.push_back(std::move(e));
        }
    for (int k = 1; k < n; ++k) {
        ComplexMatrix d(n, n);
        const double scale = 1.0 / std::sqrt(static_cast<double>(k) * (k + 1));
        for (int i = 0; i < k; ++i) d(i, i) = scale;
        d(k, k) = -static_cast<double>(k) * scale;
        basis.push_back(std::move(d));
    }
    return basis;
}

ComplexMatrix quad_form_in_A(const ComplexMatrix& b, bool traceless) {
    require_square(b, "quad_form_in_A");
    const int n = b.rows();
    const ComplexMatrix bd = adjoint(b);
    const ComplexMatrix bdb = bd * b;
    ComplexMatrix m = kron(transpose(bdb), ComplexMatrix::identity(n));
    m += kron(ComplexMatrix::identity(n), bdb);
    m -= kron(conjugate(b), b);
    m -= kron(transpose(b), bd);
    m = hermitize(0.5 * m);
    if (!traceless) return m;

    const std::vector<ComplexMatrix> basis = traceless_basis(n);
    const int dim = static_cast<int>(basis.size());
    std::vector<std::vector<Complex>> cols(dim);
    for (int k = 0; k < dim; ++k) cols[k] = vec(basis[k]);

    // compressed = V^dagger (M V) with V the basis columns.
    std::vector<std::vector<Complex>> mv(dim, std::vector<Complex>(n * n));
    for (int q = 0; q < dim; ++q) {
        for (int r = 0; r < n * n; ++r) {
            Complex acc{};
            for (int c = 0; c < n * n; ++c) acc += m(r, c) * cols[q][c];
            mv[q][r] = acc;
        }
    }
    ComplexMatrix compressed(dim, dim);
    for (int p = 0; p < dim; ++p) {
        for (int q = 0; q < dim; ++q) {
            Complex acc{};
            for (int r = 0; r < n * n; ++r) acc += std::conj(cols[p][r]) * mv[q][r];
            compressed(p, q) = acc;
        }
    }
    return hermitize(compressed);
}

ExtremizeResult alternating_extremize(const ExtremizeTask& task) {
    if (task.n < 2) throw ContractError("alternating_extremize: n must be at least 2");
    if (task.restarts < 1) throw ContractError("alternating_extremize: restarts must be >= 1");
    if (task.max_sweeps < 1) throw ContractError("alternating_extremize: max_sweeps must be >= 1");
    if (!(task.convergence_tol > 0.0)) {
        throw ContractError("alternating_extremize: convergence_tol must be positive");
    }

    const int n = task.n;
    const std::vector<ComplexMatrix> basis =
        task.traceless_a ? traceless_basis(n) : std::vector<ComplexMatrix>{};

    ExtremizeResult best;
    bool have_best = false;
    for (int restart = 0; restart < task.restarts; ++restart) {
        Rng rng(task.seed ^ static_cast<std::uint64_t>(restart));
        ComplexMatrix a =
            normalized(task.traceless_a ? rng.ginibre_traceless(n) : rng.ginibre(n, n));
        ComplexMatrix b = normalized(rng.ginibre(n, n));

        std::vector<double> trajectory;
        double ratio = r_eval(a, b);
        int sweeps = 0;
        for (int sweep = 1; sweep <= task.max_sweeps; ++sweep) {
            b = unvec(extreme_eigenvector(quad_form_in_B(a), task.maximize, nullptr), n, n);

            const ComplexMatrix form_a = quad_form_in_A(b, task.traceless_a);
            const std::vector<Complex> av =
                extreme_eigenvector(form_a, task.maximize, nullptr);
            if (task.traceless_a) {
                ComplexMatrix next(n, n);
                for (std::size_t k = 0; k < basis.size(); ++k) next += av[k] * basis[k];
                a = next;
            } else {
                a = unvec(av, n, n);
            }

            const double next_ratio = r_eval(a, b);
            trajectory.push_back(next_ratio);
            sweeps = sweep;
            if (std::abs(next_ratio - ratio) < task.convergence_tol) {
                ratio = next_ratio;
                break;
            }
            ratio = next_ratio;
        }

        const BoundConstants bounds = best_constants(n, task.traceless_a);
        if (ratio > bounds.c_plus + 1e-9 || ratio < bounds.c_minus - 1e-9) {
            throw InternalError("alternating_extremize: ratio " + std::to_string(ratio) +
                                " escaped the sharp bounds");
        }

        const bool better = !have_best || (task.maximize ? ratio > best.ratio
                                                         : ratio < best.ratio);
        if (better) {
            best.ratio = ratio;
            best.a = a;
            best.b = b;
            best.sweeps_used = sweeps;
            best.restart_index = restart;
            best.trajectory = std::move(trajectory);
            have_best = true;
        }
    }
    return best;
}

double finite_diff_check(const ComplexMatrix& a, const ComplexMatrix& b, double step) {
    require_square(a, "finite_diff_check");
    require_same_shape(a, b, "finite_diff_check");
    if (!(step >= 1e-8 && step <= 1e-4)) {
        throw ContractError("finite_diff_check: step must lie in [1e-8, 1e-4]");
    }
    const int n = a.rows();

    // Gradient of r implied by the quadratic forms: with y = M vec(X),
    // dr/dRe(x_k) = 2 Re(y_k) and dr/dIm(x_k) = 2 Im(y_k).
    const ComplexMatrix form_b = quad_form_in_B(a);
    const ComplexMatrix form_a = quad_form_in_A(b, false);
    const std::vector<Complex> va = vec(a);
    const std::vector<Complex> vb = vec(b);
    auto apply = [n](const ComplexMatrix& m, const std::vector<Complex>& x) {
        std::vector<Complex> y(static_cast<std::size_t>(n) * n, Complex{});
        for (int r = 0; r < n * n; ++r) {
            Complex acc{};
            for (int c = 0; c < n * n; ++c) acc += m(r, c) * x[c];
            y[r] = acc;
        }
        return y;
    };
    const std::vector<Complex> grad_a = apply(form_a, va);
    const std::vector<Complex> grad_b = apply(form_b, vb);

    double worst = 0.0;
    auto check_coordinate = [&](bool in_a, int i, int j, bool imag_part, double implied) {
        ComplexMatrix ap = a, bp = b, am = a, bm = b;
        const Complex delta = imag_part ? Complex(0.0, step) : Complex(step, 0.0);
        if (in_a) {
            ap(i, j) += delta;
            am(i, j) -= delta;
        } else {
            bp(i, j) += delta;
            bm(i, j) -= delta;
        }
        const double fd = (r_eval(ap, bp) - r_eval(am, bm)) / (2.0 * step);
        const double err = std::abs(fd - implied) / std::max(1.0, std::abs(implied));
        worst = std::max(worst, err);
    };

    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const std::size_t k = static_cast<std::size_t>(j) * n + i;
            check_coordinate(true, i, j, false, 2.0 * grad_a[k].real());
            check_coordinate(true, i, j, true, 2.0 * grad_a[k].imag());
            check_coordinate(false, i, j, false, 2.0 * grad_b[k].real());
            check_coordinate(false, i, j, true, 2.0 * grad_b[k].imag());
        }
    return worst;
}

} // namespace rfunc
