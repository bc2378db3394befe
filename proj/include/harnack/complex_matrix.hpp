#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

#include "harnack/errors.hpp"

namespace harnack {

using Complex = std::complex<double>;

/// Square dense complex matrix, row-major storage. Values are immutable
/// in spirit: every operation returns a fresh matrix, so instances are
/// safe to share across threads once built.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// n-by-n zero matrix.
    explicit ComplexMatrix(int n);

    /// Row-major entries; `entries.size()` must equal n*n.
    ComplexMatrix(int n, std::vector<Complex> entries);

    /// From nested rows, e.g. {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(int n);
    static ComplexMatrix diagonal(const std::vector<Complex>& d);
    static ComplexMatrix diagonal(const std::vector<double>& d);

    int dim() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    const std::vector<Complex>& entries() const { return a_; }

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex s);

    /// True when every entry has finite real and imaginary parts.
    bool is_finite() const;

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(double s, ComplexMatrix m);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);

/// Hermitian part (X + X*)/2 of the Cartesian decomposition.
ComplexMatrix real_part(const ComplexMatrix& x);

/// Hermitian part (X - X*)/(2i) of the Cartesian decomposition.
ComplexMatrix imag_part(const ComplexMatrix& x);

Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);

/// Largest Euclidean column norm; the scale reference for pivot tests.
double max_column_norm(const ComplexMatrix& m);

/// Frobenius distance ||a - b||.
double distance(const ComplexMatrix& a, const ComplexMatrix& b);

namespace detail {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op);
}

} // namespace harnack
