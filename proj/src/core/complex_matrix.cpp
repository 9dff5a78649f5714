#include "complex_matrix.hpp"

#include <cmath>
#include <cstddef>
#include <string>

namespace rfunc {

namespace {

bool all_finite(const std::vector<Complex>& entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

} // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be nonnegative");
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows < 0 || cols < 0) throw DimensionError("matrix dimensions must be nonnegative");
    if (entries_.size() != static_cast<std::size_t>(rows) * cols) {
        throw DimensionError("entry count does not match rows*cols");
    }
    if (!all_finite(entries_)) throw ContractError("matrix entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
    entries_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != cols_) {
            throw DimensionError("ragged initializer for ComplexMatrix");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
    if (!all_finite(entries_)) throw ContractError("matrix entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-=");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (Complex& z : entries_) z *= scalar;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= Complex(-1.0, 0.0); }
ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }
ComplexMatrix operator*(ComplexMatrix a, Complex scalar) { return a *= scalar; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    }
    return c;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix t(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
    return t;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) c(i, j) = std::conj(a(i, j));
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix d(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) d(j, i) = std::conj(a(i, j));
    return d;
}

Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex t{};
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

Complex trace_product(const ComplexMatrix& x, const ComplexMatrix& y) {
    if (x.cols() != y.rows() || x.rows() != y.cols()) {
        throw DimensionError("trace_product shape mismatch");
    }
    Complex t{};
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j) t += x(i, j) * y(j, i);
    return t;
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "hs_inner");
    Complex t{};
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (std::size_t k = 0; k < ae.size(); ++k) t += std::conj(ae[k]) * be[k];
    return t;
}

double frobenius_norm_squared(const ComplexMatrix& a) {
    double s = 0.0;
    for (const Complex& z : a.entries()) s += std::norm(z);
    return s;
}

double frobenius_norm(const ComplexMatrix& a) { return std::sqrt(frobenius_norm_squared(a)); }

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "commutator");
    require_same_shape(a, b, "commutator");
    return a * b - b * a;
}

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_square(a, "anticommutator");
    require_same_shape(a, b, "anticommutator");
    return a * b + b * a;
}

CartesianParts cartesian_split(const ComplexMatrix& a) {
    require_square(a, "cartesian_split");
    const ComplexMatrix ad = adjoint(a);
    CartesianParts parts{ComplexMatrix(a.rows(), a.cols()), ComplexMatrix(a.rows(), a.cols())};
    const Complex half(0.5, 0.0);
    const Complex half_over_i(0.0, -0.5); // 1/(2i)
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            parts.real_part(i, j) = half * (a(i, j) + ad(i, j));
            parts.imag_part(i, j) = half_over_i * (a(i, j) - ad(i, j));
        }
    }
    return parts;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            const Complex aij = a(i1, j1);
            if (aij == Complex{}) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2)
                    k(i1 * b.rows() + i2, j1 * b.cols() + j2) = aij * b(i2, j2);
        }
    return k;
}

std::vector<Complex> vec(const ComplexMatrix& a) {
    std::vector<Complex> v(static_cast<std::size_t>(a.rows()) * a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i)
            v[static_cast<std::size_t>(j) * a.rows() + i] = a(i, j);
    return v;
}

ComplexMatrix unvec(const std::vector<Complex>& v, int rows, int cols) {
    if (v.size() != static_cast<std::size_t>(rows) * cols) {
        throw DimensionError("unvec length mismatch");
    }
    ComplexMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = v[static_cast<std::size_t>(j) * rows + i];
    return m;
}

bool is_hermitian(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    return frobenius_norm(a - adjoint(a)) <= tol * std::max(1.0, frobenius_norm(a));
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    const ComplexMatrix g = adjoint(a) * a - ComplexMatrix::identity(a.rows());
    return frobenius_norm(g) <= tol * std::max(1.0, frobenius_norm_squared(a));
}

bool is_normal(const ComplexMatrix& a, double tol) {
    if (!a.is_square()) return false;
    return frobenius_norm(commutator(adjoint(a), a)) <= tol * frobenius_norm_squared(a);
}

void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square()) {
        throw DimensionError(std::string(op) + ": square matrix required, got " +
                             std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) +
                             "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                             "x" + std::to_string(b.cols()));
    }
}

void require_finite(const ComplexMatrix& a, const char* op) {
    if (!all_finite(a.entries())) {
        throw ContractError(std::string(op) + ": non-finite matrix entries");
    }
}

} // namespace rfunc
