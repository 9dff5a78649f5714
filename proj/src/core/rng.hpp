#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "complex_matrix.hpp"

namespace rfunc {

/// Deterministic random source. Uniform doubles are built directly from
/// mt19937_64 words and Gaussians via Box-Muller, so a fixed seed gives
/// the same stream on every platform (std::*_distribution would not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Standard complex Gaussian with E|z|^2 = 1.
    Complex complex_gaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0);
    }

    ComplexMatrix ginibre(int rows, int cols) {
        ComplexMatrix g(rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) g(i, j) = complex_gaussian();
        return g;
    }

    ComplexMatrix ginibre_traceless(int n) {
        ComplexMatrix g = ginibre(n, n);
        const Complex shift = trace(g) / static_cast<double>(n);
        for (int i = 0; i < n; ++i) g(i, i) -= shift;
        return g;
    }

    ComplexMatrix hermitian(int n) {
        ComplexMatrix g = ginibre(n, n);
        return 0.5 * (g + adjoint(g));
    }

    /// Unitary from the QR of a Ginibre draw (modified Gram-Schmidt).
    ComplexMatrix haar_unitary(int n) {
        ComplexMatrix g = ginibre(n, n);
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < j; ++k) {
                Complex proj{};
                for (int i = 0; i < n; ++i) proj += std::conj(g(i, k)) * g(i, j);
                for (int i = 0; i < n; ++i) g(i, j) -= proj * g(i, k);
            }
            double norm = 0.0;
            for (int i = 0; i < n; ++i) norm += std::norm(g(i, j));
            norm = std::sqrt(norm);
            if (norm < 1e-14) {
                // Degenerate draw; fall back to a basis vector.
                for (int i = 0; i < n; ++i) g(i, j) = (i == j) ? 1.0 : 0.0;
                continue;
            }
            for (int i = 0; i < n; ++i) g(i, j) /= norm;
        }
        return g;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

} // namespace rfunc
