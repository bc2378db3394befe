#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "harnack/bound_formulas.hpp"
#include "harnack/complex_matrix.hpp"
#include "harnack/index_set.hpp"

namespace harnack {

/// Throws NotContractive unless 1 - sigma_1 >= margin. The margin keeps
/// (I - A)^{-1} well-conditioned for everything downstream.
void require_strict_contraction(const std::vector<double>& sv, double margin);

/// H(A) = (I - A*)^{-1} (I - A*A) (I - A)^{-1}, symmetrized as
/// (H + H*)/2 before return. Positive definite for strict contractions.
/// Throws SingularMatrix when 1 is an eigenvalue of A.
ComplexMatrix harnack_quotient(const ComplexMatrix& a);

/// Frobenius residuals of H(A) against its closed forms:
///   expz: 2 Re((I-A)^{-1}) - I
///   exp2: 2 Re((I-A)^{-1} - I/2)
///   fan:  Re((I+A)(I-A)^{-1})
///   exp3: S*S with S = (I-A*A)^{1/2} (I-A)^{-1}   (contractions only)
/// The first three hold for any A with 1 not in the spectrum; exp3 is
/// std::nullopt when the input is not a strict contraction.
struct IdentityResiduals {
    double expz = 0.0;
    double exp2 = 0.0;
    double fan = 0.0;
    std::optional<double> exp3;
    double scale = 0.0; // 1 + ||H||, the reference for the residual bound
};
IdentityResiduals identity_residuals(const ComplexMatrix& a, double margin = kDefaultMargin);

/// Determinantal Harnack chain for a strict contraction Z and unitary U:
///   prod (1-r_k)/(1+r_k)  <=  det(I-Z*Z)/|det(I-UZ)|^2  <=  prod (1+r_k)/(1-r_k).
struct TungReport {
    double lower = 0.0;
    double middle = 0.0;
    double upper = 0.0;
    std::string equality_side; // "none", "left" or "right", detected at 1e-9
};
TungReport tung_check(const ComplexMatrix& z, const ComplexMatrix& u,
                      double margin = kDefaultMargin);

/// Per-j pairs (lambda_j(H(A)), (1+r_j)/(1-r_j)).
struct EigenBoundRow {
    double lambda = 0.0;
    double bound = 0.0;
};
std::vector<EigenBoundRow> eigen_bound_rows(const ComplexMatrix& a,
                                            double margin = kDefaultMargin);

/// Every bound family evaluated for one (matrix, index set) pair.
/// Slacks are signed so that >= -tol always means satisfied:
/// bound - lhs for upper bounds, lhs - bound for lower bounds.
struct BoundReport {
    std::string matrix_id;
    IndexSet index_set;
    double lhs = 0.0;       // prod_j lambda_{i_j}(H)
    double lhs_lower = 0.0; // prod_j lambda_{n-i_j+1}(H)
    std::map<std::string, double> upper_bounds; // R1..R5
    std::map<std::string, double> lower_bounds; // Jb, Jb_swapped, JbX, JbY, fan_lower
    std::map<std::string, double> slacks;
    std::map<std::string, bool> verdict;
    bool all_pass = true;
};
BoundReport bound_report(const ComplexMatrix& a, const IndexSet& s,
                         double tol = kDefaultTol, double margin = kDefaultMargin,
                         const std::string& matrix_id = "");

/// Reports how the naive reversal (1-r_j)/(1+r_j) fails as a per-j lower
/// bound for lambda_j(H), alongside the two bounds that do hold.
struct NaiveLowerRow {
    double lambda = 0.0;
    double naive_bound = 0.0;  // (1-r_j)/(1+r_j); not a theorem
    bool naive_violated = false;
    double valid_tail = 0.0;   // (1-r_{n-j+1}^2)/(1+r_1)^2
    double valid_swapped = 0.0; // (1-r_1^2)/(1+r_{n-j+1})^2
    bool valid_tail_ok = false;
    bool valid_swapped_ok = false;
};
std::vector<NaiveLowerRow> naive_lower_bound_check(const ComplexMatrix& a,
                                                   double tol = kDefaultTol,
                                                   double margin = kDefaultMargin);

/// Two-matrix extension: for nonsingular A, A - B the matrix
/// M = (A*-B*)^{-1} (A*A - B*B) (A-B)^{-1} equals 2 Re((I-BA^{-1})^{-1}) - I,
/// and for ||B A^{-1}|| < 1 its partial eigenvalue products are bounded by
/// prod (sigma_n(A)+sigma_j(B)) / (sigma_n(A)-sigma_j(B)).
struct MultiMatrixReport {
    double identity_residual = 0.0;
    double residual_scale = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = true;
};
MultiMatrixReport multi_matrix_bound(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const IndexSet& s, double tol = kDefaultTol,
                                     double margin = kDefaultMargin);

} // namespace harnack
