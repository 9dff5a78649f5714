#pragma once

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace rfunc {

using Complex = std::complex<double>;

/// Dense complex matrix with row-major storage. Values are immutable in
/// spirit: every operation returns a fresh matrix, so instances can be
/// shared freely across threads.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);
    ComplexMatrix(int rows, int cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<std::size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex scalar);

ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix adjoint(const ComplexMatrix& a);

Complex trace(const ComplexMatrix& a);

/// tr(X * Y) without forming the product.
Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y);

/// Hilbert-Schmidt inner product tr(A^dagger B); conjugate-linear in the
/// first argument.
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

double frobenius_norm(const ComplexMatrix& a);
double frobenius_norm_squared(const ComplexMatrix& a);

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

struct CartesianParts {
    ComplexMatrix real_part; // (A + A^dagger)/2, Hermitian
    ComplexMatrix imag_part; // (A - A^dagger)/(2i), Hermitian
};

/// A = real_part + i * imag_part with both parts Hermitian.
CartesianParts cartesian_split(const ComplexMatrix& a);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Column-stacking vectorization: vec(X)[i + rows*j] = X(i, j).
std::vector<Complex> vec(const ComplexMatrix& a);
ComplexMatrix unvec(const std::vector<Complex>& v, int rows, int cols);

bool is_hermitian(const ComplexMatrix& a, double tol = 1e-12);
bool is_unitary(const ComplexMatrix& a, double tol = 1e-12);

/// Scale-free normality test: ||[A^dagger, A]|| <= tol * ||A||^2.
bool is_normal(const ComplexMatrix& a, double tol = 1e-10);

void require_square(const ComplexMatrix& a, const char* op);
void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op);
void require_finite(const ComplexMatrix& a, const char* op);

} // namespace rfunc
