#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harnack/bound_formulas.hpp"
#include "harnack/complex_matrix.hpp"
#include "harnack/index_set.hpp"

namespace harnack {

/// Cayley transform C(X) = (X - iI)(X + iI)^{-1}. Defined whenever
/// X + iI is nonsingular (always, for strict contractions); maps
/// Hermitian matrices to unitaries.
ComplexMatrix cayley(const ComplexMatrix& x);

/// Chain report for the partial singular-value products of a Cayley
/// transform (single matrix) or of a transform difference (pair).
struct CayleyReport {
    IndexSet index_set;
    double lhs = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool verdict = true;
    /// Difference chains only: residual of
    /// C(A)-C(B) = 2i (B+iI)^{-1} (A-B) (A+iI)^{-1} and its scale.
    std::optional<double> factorization_residual;
    /// "corrected" when the lower bound uses the (1+sigma_j) denominators
    /// derivable from the product inequalities (see README).
    std::string lower_bound_form = "stated";
};

/// prod (1-s_{n-i_j+1}(A))/(1+s_j(A))  <=  prod s_{i_j}(C(A))  <=
/// prod (1+s_{i_j}(A))/(1-s_j(A)).
CayleyReport cayley_bounds(const ComplexMatrix& a, const IndexSet& s,
                           double tol = kDefaultTol, double margin = kDefaultMargin);

/// Difference chain with upper bound
/// prod 2 s_{i_j}(A-B)/((1-s_j(A))(1-s_j(B))) and the corrected lower
/// bound prod 2 s_{i_j}(A-B)/((1+s_j(A))(1+s_j(B))).
CayleyReport cayley_difference_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const IndexSet& s, double tol = kDefaultTol,
                                      double margin = kDefaultMargin);

/// Per-j comparison s_j(C(A)-C(B)) vs 2 s_j(A-B), the sharper bound
/// available when A and B are Hermitian.
struct FanHoffmanRow {
    double sigma_diff = 0.0;   // s_j(C(A)-C(B))
    double sigma_bound = 0.0;  // 2 s_j(A-B)
    bool ok = true;
};
std::vector<FanHoffmanRow> fan_hoffman_rows(const ComplexMatrix& a, const ComplexMatrix& b,
                                            double tol = kDefaultTol,
                                            double margin = kDefaultMargin);

} // namespace harnack
