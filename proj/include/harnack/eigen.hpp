#pragma once

#include <vector>

#include "harnack/complex_matrix.hpp"

namespace harnack {

/// Sorted spectral summary of a matrix. Eigenvalues follow a fixed
/// ordering contract (descending modulus, ties broken by descending real
/// part, then descending imaginary part) so reports are reproducible.
struct SpectralData {
    std::vector<double> singular_values; // descending, non-negative
    std::vector<Complex> eigenvalues;    // ordering contract above
};

/// Eigenvalues of a Hermitian matrix via cyclic Jacobi rotations,
/// sorted descending. Throws NotHermitian when ||H - H*|| exceeds
/// 1e-10 * (1 + ||H||).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Full Jacobi eigendecomposition H = V diag(values) V*. Used where a
/// Hermitian square root is needed; eigenvectors are not part of the
/// public spectral reports.
struct HermitianEigen {
    std::vector<double> values; // descending
    ComplexMatrix vectors;      // unitary, columns match `values`
};
HermitianEigen hermitian_eigen(const ComplexMatrix& h);

/// Singular values sigma_j(A) = sqrt(lambda_j(A*A)), descending,
/// clamped at zero.
std::vector<double> singular_values(const ComplexMatrix& a);

/// Hermitian square root of a positive semidefinite matrix; negative
/// rounding dust in the spectrum is clamped at zero before the root.
ComplexMatrix sqrt_psd(const ComplexMatrix& h);

/// Polar absolute value |A| = (A*A)^(1/2).
ComplexMatrix polar_abs(const ComplexMatrix& a);

/// Eigenvalues of a general complex matrix: Hessenberg reduction by
/// unitary similarity followed by Wilkinson-shifted QR iteration.
/// Returned in the SpectralData ordering contract. Throws
/// ConvergenceFailure after 100*n^2 iterations without a deflation.
std::vector<Complex> general_eigenvalues(const ComplexMatrix& a);

SpectralData spectral_data(const ComplexMatrix& a);

/// Sorts in place by the eigenvalue ordering contract.
void sort_eigenvalues(std::vector<Complex>& v);

/// Spectral norm of a Hermitian matrix (largest |eigenvalue|).
double hermitian_spectral_norm(const ComplexMatrix& h);

} // namespace harnack
