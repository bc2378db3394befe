#include "harnack/complex_matrix.hpp"

#include <cmath>
#include <utility>

namespace harnack {

ComplexMatrix::ComplexMatrix(int n) : n_(n) {
    if (n < 0) throw Error("matrix dimension must be non-negative");
    a_.assign(static_cast<size_t>(n) * n, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
    if (n < 0 || a_.size() != static_cast<size_t>(n) * n)
        throw Error("entry count does not match matrix dimension");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    n_ = static_cast<int>(rows.size());
    a_.reserve(static_cast<size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) throw Error("matrix rows must all have length n");
        a_.insert(a_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[static_cast<size_t>(i)];
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    detail::require_same_dim(*this, rhs, "+");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    detail::require_same_dim(*this, rhs, "-");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= rhs.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (auto& v : a_) v *= s;
    return *this;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& v : a_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    detail::require_same_dim(lhs, rhs, "*");
    const int n = lhs.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Complex aik = lhs(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) out(i, j) += aik * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) { return m *= s; }
ComplexMatrix operator*(double s, ComplexMatrix m) { return m *= Complex(s, 0.0); }

ComplexMatrix adjoint(const ComplexMatrix& m) {
    const int n = m.dim();
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

ComplexMatrix real_part(const ComplexMatrix& x) {
    ComplexMatrix out = x + adjoint(x);
    return out *= Complex(0.5, 0.0);
}

ComplexMatrix imag_part(const ComplexMatrix& x) {
    ComplexMatrix out = x - adjoint(x);
    return out *= Complex(0.0, -0.5); // 1/(2i) = -i/2
}

Complex trace(const ComplexMatrix& m) {
    Complex t(0.0, 0.0);
    for (int i = 0; i < m.dim(); ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.entries()) s += std::norm(v);
    return std::sqrt(s);
}

double max_column_norm(const ComplexMatrix& m) {
    const int n = m.dim();
    double best = 0.0;
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s += std::norm(m(i, j));
        best = std::max(best, s);
    }
    return std::sqrt(best);
}

double distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    return frobenius_norm(a - b);
}

namespace detail {
void require_same_dim(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.dim() != b.dim())
        throw Error(std::string("dimension mismatch in matrix operation '") + op + "'");
}
} // namespace detail

} // namespace harnack
