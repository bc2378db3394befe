#include "harnack/lu.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace harnack {

LuFactors lu_factor(const ComplexMatrix& a) {
    const int n = a.dim();
    LuFactors f;
    f.lu = a;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    f.scale = max_column_norm(a);
    f.min_pivot = n > 0 ? std::numeric_limits<double>::infinity() : 0.0;

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(f.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double cand = std::abs(f.lu(i, k));
            if (cand > best) {
                best = cand;
                piv = i;
            }
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        f.min_pivot = std::min(f.min_pivot, best);
        if (best == 0.0) continue; // column already eliminated; matrix singular
        const Complex pivot = f.lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Complex m = f.lu(i, k) / pivot;
            f.lu(i, k) = m;
            if (m == Complex(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& b) {
    if (f.singular()) throw SingularMatrix("pivot below singularity threshold in LU solve");
    const int n = f.lu.dim();
    detail::require_same_dim(f.lu, b, "solve");

    // Apply permutation, then forward/back substitution, column by column.
    ComplexMatrix x(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = b(f.perm[i], j);
    for (int col = 0; col < n; ++col) {
        for (int i = 1; i < n; ++i) {
            Complex s = x(i, col);
            for (int k = 0; k < i; ++k) s -= f.lu(i, k) * x(k, col);
            x(i, col) = s;
        }
        for (int i = n - 1; i >= 0; --i) {
            Complex s = x(i, col);
            for (int k = i + 1; k < n; ++k) s -= f.lu(i, k) * x(k, col);
            x(i, col) = s / f.lu(i, i);
        }
    }
    return x;
}

ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b) {
    return lu_solve(lu_factor(a), b);
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return lu_solve(lu_factor(a), ComplexMatrix::identity(a.dim()));
}

Complex determinant(const ComplexMatrix& a) {
    const LuFactors f = lu_factor(a);
    Complex det(static_cast<double>(f.sign), 0.0);
    for (int i = 0; i < a.dim(); ++i) det *= f.lu(i, i);
    return det;
}

} // namespace harnack
