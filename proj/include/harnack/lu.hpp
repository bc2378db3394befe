#pragma once

#include "harnack/complex_matrix.hpp"

namespace harnack {

/// Relative pivot threshold below which a matrix is declared singular.
inline constexpr double kSingularPivotTol = 1e-12;

/// Partial-pivoting LU factorization. `lu` stores L (unit lower, below
/// the diagonal) and U (on and above) in place; `perm` is the row
/// permutation applied to the input.
struct LuFactors {
    ComplexMatrix lu;
    std::vector<int> perm;
    int sign = 1;          // permutation parity
    double min_pivot = 0.0;
    double scale = 0.0;    // max column norm of the input

    bool singular() const { return min_pivot < kSingularPivotTol * scale || scale == 0.0; }
};

LuFactors lu_factor(const ComplexMatrix& a);

/// Solves A X = B. Throws SingularMatrix when the pivot test fails,
/// which for inputs of the form I - A signals 1 being an eigenvalue of A.
ComplexMatrix lu_solve(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& b);

ComplexMatrix inverse(const ComplexMatrix& a);

/// Product of pivots with permutation sign. Does not throw on singular
/// input; the determinant of a singular matrix is simply (near) zero.
Complex determinant(const ComplexMatrix& a);

} // namespace harnack
