#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "errors.hpp"

namespace rfunc {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double column_norm_squared(const ComplexMatrix& m, int j) {
    double s = 0.0;
    for (int i = 0; i < m.rows(); ++i) s += std::norm(m(i, j));
    return s;
}

Complex column_dot(const ComplexMatrix& m, int p, int q) {
    Complex d{};
    for (int i = 0; i < m.rows(); ++i) d += std::conj(m(i, p)) * m(i, q);
    return d;
}

/// Complex Givens rotation G = [[c, s], [-conj(s), c]] with real c >= 0
/// such that G * (x, y)^T has a zero second component.
void make_givens(Complex x, Complex y, double& c, Complex& s) {
    const double ax = std::abs(x);
    const double ay = std::abs(y);
    if (ay == 0.0) {
        c = 1.0;
        s = Complex{};
        return;
    }
    if (ax == 0.0) {
        c = 0.0;
        s = std::conj(y) / ay;
        return;
    }
    const double r = std::hypot(ax, ay);
    c = ax / r;
    s = (x / ax) * (std::conj(y) / r);
}

/// Householder similarity that zeroes column k below row k+1.
/// Applies P = I - beta v v^dagger on both sides of a and on the right of q.
void householder_column(ComplexMatrix& a, ComplexMatrix& q, int k) {
    const int n = a.rows();
    double xnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) return;

    const Complex x0 = a(k + 1, k);
    const Complex phase = (std::abs(x0) > 0.0) ? x0 / std::abs(x0) : Complex(1.0, 0.0);
    const Complex alpha = -phase * xnorm;

    std::vector<Complex> v(n, Complex{});
    for (int i = k + 1; i < n; ++i) v[i] = a(i, k);
    v[k + 1] -= alpha;
    double vnorm2 = 0.0;
    for (int i = k + 1; i < n; ++i) vnorm2 += std::norm(v[i]);
    if (vnorm2 <= 0.0) return;
    const double beta = 2.0 / vnorm2;

    // Left update: a <- a - beta * v (v^dagger a).
    for (int j = 0; j < n; ++j) {
        Complex w{};
        for (int i = k + 1; i < n; ++i) w += std::conj(v[i]) * a(i, j);
        w *= beta;
        for (int i = k + 1; i < n; ++i) a(i, j) -= v[i] * w;
    }
    // Right update: a <- a - beta * (a v) v^dagger.
    for (int i = 0; i < n; ++i) {
        Complex w{};
        for (int j = k + 1; j < n; ++j) w += a(i, j) * v[j];
        w *= beta;
        for (int j = k + 1; j < n; ++j) a(i, j) -= w * std::conj(v[j]);
    }
    // Accumulate q <- q P.
    for (int i = 0; i < n; ++i) {
        Complex w{};
        for (int j = k + 1; j < n; ++j) w += q(i, j) * v[j];
        w *= beta;
        for (int j = k + 1; j < n; ++j) q(i, j) -= w * std::conj(v[j]);
    }
}

/// QL with implicit shifts on a real symmetric tridiagonal (d, e), rotating
/// the complex columns of z alongside.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, ComplexMatrix& z) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.resize(n, 0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        while (true) {
            int m = l;
            for (; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= kEps * dd) break;
            }
            if (m == l) break;
            if (++iter > 60) {
                throw ConvergenceError("tridiagonal QL failed to converge; off-diagonal " +
                                       std::to_string(std::abs(e[l])));
            }
            double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
            double s = 1.0, c = 1.0, p = 0.0;
            bool underflow = false;
            for (int i = m - 1; i >= l; --i) {
                double f = s * e[i];
                const double b = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                for (int k = 0; k < z.rows(); ++k) {
                    const Complex t = z(k, i + 1);
                    z(k, i + 1) = s * z(k, i) + c * t;
                    z(k, i) = c * z(k, i) - s * t;
                }
            }
            if (underflow) continue;
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
}

std::vector<double> pair_residuals(const ComplexMatrix& m, const EigenResult& r) {
    const int n = m.rows();
    std::vector<double> res(n, 0.0);
    for (int k = 0; k < n; ++k) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) {
            Complex acc = -r.values[k] * r.vectors(i, k);
            for (int j = 0; j < n; ++j) acc += m(i, j) * r.vectors(j, k);
            s += std::norm(acc);
        }
        res[k] = std::sqrt(s);
    }
    return res;
}

} // namespace

SvdResult svd(const ComplexMatrix& a) {
    require_square(a, "svd");
    require_finite(a, "svd");
    const int n = a.rows();
    SvdResult out;
    out.left = ComplexMatrix::identity(n);
    out.right = ComplexMatrix::identity(n);
    out.singular_values.assign(n, 0.0);
    if (n == 0) return out;

    ComplexMatrix u = a;
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double rel_tol = 1e-15;
    const int max_sweeps = 60;

    bool converged = false;
    double worst = 0.0;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        converged = true;
        worst = 0.0;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double alpha = column_norm_squared(u, p);
                const double beta = column_norm_squared(u, q);
                const Complex gamma = column_dot(u, p, q);
                const double ag = std::abs(gamma);
                if (ag <= rel_tol * std::sqrt(alpha * beta) || ag == 0.0) continue;
                converged = false;
                worst = std::max(worst, ag / std::max(std::sqrt(alpha * beta), kEps));

                const Complex phase = gamma / ag; // e^{i phi}
                const double tau = (beta - alpha) / (2.0 * ag);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(tau, 1.0));
                const double c = 1.0 / std::hypot(t, 1.0);
                const double s = t * c;
                const Complex sp = s * std::conj(phase); // s * e^{-i phi}
                const Complex cp = c * std::conj(phase);
                for (int i = 0; i < n; ++i) {
                    const Complex up = u(i, p), uq = u(i, q);
                    u(i, p) = c * up - sp * uq;
                    u(i, q) = s * up + cp * uq;
                }
                for (int i = 0; i < n; ++i) {
                    const Complex vp = v(i, p), vq = v(i, q);
                    v(i, p) = c * vp - sp * vq;
                    v(i, q) = s * vp + cp * vq;
                }
            }
        }
    }
    if (!converged) {
        throw ConvergenceError("jacobi SVD did not converge; worst column coherence " +
                               std::to_string(worst));
    }

    std::vector<double> norms(n);
    for (int j = 0; j < n; ++j) norms[j] = std::sqrt(column_norm_squared(u, j));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return norms[x] > norms[y]; });

    const double zero_tol = n * kEps * std::max(1.0, norms.empty() ? 0.0 : norms[order[0]]);
    ComplexMatrix left(n, n), right(n, n);
    for (int j = 0; j < n; ++j) {
        const int src = order[j];
        out.singular_values[j] = norms[src];
        for (int i = 0; i < n; ++i) right(i, j) = v(i, src);
        if (norms[src] > zero_tol) {
            for (int i = 0; i < n; ++i) left(i, j) = u(i, src) / norms[src];
        }
    }
    // Complete the left factor for (near-)zero singular values.
    for (int j = 0; j < n; ++j) {
        if (out.singular_values[j] > zero_tol) continue;
        int best_seed = 0;
        double best_norm = -1.0;
        std::vector<Complex> cand(n);
        for (int seed = 0; seed < n; ++seed) {
            std::vector<Complex> w(n, Complex{});
            w[seed] = 1.0;
            for (int k = 0; k < n; ++k) {
                if (k == j || (k > j && out.singular_values[k] <= zero_tol)) continue;
                Complex proj{};
                for (int i = 0; i < n; ++i) proj += std::conj(left(i, k)) * w[i];
                for (int i = 0; i < n; ++i) w[i] -= proj * left(i, k);
            }
            double wn = 0.0;
            for (int i = 0; i < n; ++i) wn += std::norm(w[i]);
            if (wn > best_norm) {
                best_norm = wn;
                best_seed = seed;
                cand = w;
            }
        }
        (void)best_seed;
        const double wn = std::sqrt(best_norm);
        for (int i = 0; i < n; ++i) left(i, j) = cand[i] / wn;
    }
    out.left = std::move(left);
    out.right = std::move(right);
    return out;
}

EigenResult eig_hermitian(const ComplexMatrix& m) {
    require_square(m, "eig_hermitian");
    require_finite(m, "eig_hermitian");
    const double scale = std::max(1.0, frobenius_norm(m));
    if (frobenius_norm(m - adjoint(m)) > 1e-12 * scale) {
        throw ContractError("eig_hermitian: input is not Hermitian within tolerance");
    }
    const int n = m.rows();
    EigenResult out;
    out.tolerance = 1e-10 * scale;
    if (n == 0) {
        out.vectors = ComplexMatrix(0, 0);
        return out;
    }

    // Work on the symmetrized copy so the tridiagonal form is exactly real.
    ComplexMatrix a = 0.5 * (m + adjoint(m));
    ComplexMatrix q = ComplexMatrix::identity(n);
    for (int k = 0; k + 2 < n; ++k) householder_column(a, q, k);

    std::vector<double> d(n), e(n, 0.0);
    for (int i = 0; i < n; ++i) d[i] = a(i, i).real();

    // Rotate sub-diagonal phases into q so the tridiagonal is real.
    Complex phase(1.0, 0.0);
    for (int i = 0; i + 1 < n; ++i) {
        const Complex sub = a(i + 1, i);
        const double mag = std::abs(sub);
        e[i] = mag;
        if (mag > 0.0) phase *= sub / mag;
        for (int r = 0; r < n; ++r) q(r, i + 1) *= phase;
    }

    tridiagonal_ql(d, e, q);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return d[x] < d[y]; });

    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.values[j] = Complex(d[order[j]], 0.0);
        double vnorm = 0.0;
        for (int i = 0; i < n; ++i) vnorm += std::norm(q(i, order[j]));
        vnorm = std::sqrt(vnorm);
        for (int i = 0; i < n; ++i) out.vectors(i, j) = q(i, order[j]) / vnorm;
    }
    out.residuals = pair_residuals(m, out);
    out.defective.assign(n, false);
    for (int k = 0; k < n; ++k) {
        if (out.residuals[k] > out.tolerance) {
            throw ConvergenceError("eig_hermitian residual " + std::to_string(out.residuals[k]) +
                                   " exceeds tolerance");
        }
    }
    return out;
}

EigenResult eig_general(const ComplexMatrix& m) {
    require_square(m, "eig_general");
    require_finite(m, "eig_general");
    const int n = m.rows();
    const double scale = std::max(1.0, frobenius_norm(m));
    EigenResult out;
    out.tolerance = 1e-8 * scale;
    if (n == 0) {
        out.vectors = ComplexMatrix(0, 0);
        return out;
    }

    ComplexMatrix h = m;
    ComplexMatrix q = ComplexMatrix::identity(n);
    for (int k = 0; k + 2 < n; ++k) householder_column(h, q, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < i; ++j) h(i, j) = Complex{};

    // Shifted QR on the Hessenberg form; deflate eigenvalues from the bottom.
    const int max_total = 100 * n;
    int total_iter = 0;
    int since_deflation = 0;
    int hi = n - 1;
    std::vector<double> cs(n, 0.0);
    std::vector<Complex> sn(n, Complex{});
    while (hi > 0) {
        int lo = hi;
        while (lo > 0) {
            const double offd = std::abs(h(lo, lo - 1));
            const double ds = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
            if (offd <= kEps * (ds > 0.0 ? ds : scale)) {
                h(lo, lo - 1) = Complex{};
                break;
            }
            --lo;
        }
        if (lo == hi) {
            --hi;
            since_deflation = 0;
            continue;
        }
        if (++total_iter > max_total) {
            throw ConvergenceError("eig_general: QR iteration budget exhausted; residual " +
                                   std::to_string(std::abs(h(hi, hi - 1))));
        }

        Complex mu;
        if (++since_deflation % 15 == 0) {
            // Exceptional shift to break rare shift cycles.
            const double t =
                std::abs(h(hi, hi - 1)) + (hi >= 2 ? std::abs(h(hi - 1, hi - 2)) : 0.0);
            mu = h(hi, hi) + Complex(0.75 * t, 0.0);
        } else {
            // Wilkinson shift: trailing 2x2 eigenvalue closest to h(hi, hi).
            const Complex a = h(hi - 1, hi - 1), b = h(hi - 1, hi);
            const Complex c = h(hi, hi - 1), d = h(hi, hi);
            const Complex mean = 0.5 * (a + d);
            const Complex disc = std::sqrt(mean * mean - (a * d - b * c));
            const Complex mu1 = mean + disc, mu2 = mean - disc;
            mu = (std::abs(mu1 - d) < std::abs(mu2 - d)) ? mu1 : mu2;
        }

        for (int i = lo; i <= hi; ++i) h(i, i) -= mu;
        for (int i = lo; i < hi; ++i) {
            make_givens(h(i, i), h(i + 1, i), cs[i], sn[i]);
            const double c = cs[i];
            const Complex s = sn[i];
            for (int j = i; j < n; ++j) {
                const Complex t1 = h(i, j), t2 = h(i + 1, j);
                h(i, j) = c * t1 + s * t2;
                h(i + 1, j) = -std::conj(s) * t1 + c * t2;
            }
            h(i + 1, i) = Complex{};
        }
        for (int i = lo; i < hi; ++i) {
            const double c = cs[i];
            const Complex s = sn[i];
            const int rmax = i + 1;
            for (int r = 0; r <= rmax; ++r) {
                const Complex t1 = h(r, i), t2 = h(r, i + 1);
                h(r, i) = c * t1 + std::conj(s) * t2;
                h(r, i + 1) = -s * t1 + c * t2;
            }
            for (int r = 0; r < n; ++r) {
                const Complex t1 = q(r, i), t2 = q(r, i + 1);
                q(r, i) = c * t1 + std::conj(s) * t2;
                q(r, i + 1) = -s * t1 + c * t2;
            }
        }
        for (int i = lo; i <= hi; ++i) h(i, i) += mu;
    }

    // h is now the triangular Schur factor; eigenvectors by back-substitution.
    std::vector<std::vector<Complex>> schur_vecs(n, std::vector<Complex>(n, Complex{}));
    for (int k = 0; k < n; ++k) {
        std::vector<Complex>& y = schur_vecs[k];
        y[k] = 1.0;
        const Complex lambda = h(k, k);
        for (int i = k - 1; i >= 0; --i) {
            Complex num{};
            for (int j = i + 1; j <= k; ++j) num -= h(i, j) * y[j];
            Complex den = h(i, i) - lambda;
            if (std::abs(den) < kEps * scale) den = Complex(kEps * scale, 0.0);
            y[i] = num / den;
            const double mag = std::abs(y[i]);
            if (mag > 1e100) {
                for (int j = i; j <= k; ++j) y[j] /= mag;
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        if (h(x, x).real() != h(y, y).real()) return h(x, x).real() < h(y, y).real();
        return h(x, x).imag() < h(y, y).imag();
    });

    out.values.resize(n);
    out.vectors = ComplexMatrix(n, n);
    for (int col = 0; col < n; ++col) {
        const int k = order[col];
        out.values[col] = h(k, k);
        std::vector<Complex> v(n, Complex{});
        for (int r = 0; r < n; ++r) {
            Complex acc{};
            for (int j = 0; j <= k; ++j) acc += q(r, j) * schur_vecs[k][j];
            v[r] = acc;
        }
        double vnorm = 0.0;
        for (int r = 0; r < n; ++r) vnorm += std::norm(v[r]);
        vnorm = std::sqrt(vnorm);
        if (vnorm == 0.0) vnorm = 1.0;
        for (int r = 0; r < n; ++r) out.vectors(r, col) = v[r] / vnorm;
    }

    out.residuals = pair_residuals(m, out);
    out.defective.assign(n, false);
    for (int k = 0; k < n; ++k) out.defective[k] = out.residuals[k] > out.tolerance;

    // A defective matrix can hand back duplicated directions with small
    // residuals; flag eigenvalue clusters whose vectors are rank deficient.
    const double cluster_tol = 1e-8 * scale;
    int start = 0;
    while (start < n) {
        int stop = start;
        while (stop + 1 < n && std::abs(out.values[stop + 1] - out.values[stop]) <= cluster_tol)
            ++stop;
        const int g = stop - start + 1;
        if (g >= 2) {
            ComplexMatrix gram(g, g);
            for (int x = 0; x < g; ++x)
                for (int y = 0; y < g; ++y) {
                    Complex acc{};
                    for (int r = 0; r < n; ++r)
                        acc += std::conj(out.vectors(r, start + x)) * out.vectors(r, start + y);
                    gram(x, y) = acc;
                }
            gram = 0.5 * (gram + adjoint(gram));
            const EigenResult ge = eig_hermitian(gram);
            if (ge.values.front().real() < 1e-12) {
                for (int k = start; k <= stop; ++k) out.defective[k] = true;
            }
        }
        start = stop + 1;
    }
    return out;
}

} // namespace rfunc
