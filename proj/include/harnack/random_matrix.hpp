#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "harnack/complex_matrix.hpp"
#include "harnack/rng.hpp"

namespace harnack {

enum class RandomMode {
    GaussianScaled,           // iid complex Gaussian entries, rescaled so sigma_1 = max_norm
    PrescribedSingularValues, // U diag(prescribed) V* with Haar-ish U, V
    Hermitian,                // (G + G*)/2 rescaled to max_norm
    Normal,                   // U diag(d) U*, max |d_j| = max_norm
    SingularContraction,      // prescribed spectrum with the smallest value forced to 0
};

RandomMode random_mode_from_string(const std::string& name); // throws InvalidSpec
std::string to_string(RandomMode mode);
const std::vector<RandomMode>& all_random_modes();

/// Recipe for one seeded random matrix. All randomness flows from
/// `seed`; the same spec always yields the same matrix.
struct RandomSpec {
    int n = 0;
    RandomMode mode = RandomMode::GaussianScaled;
    double max_norm = 0.9;
    std::optional<std::vector<double>> prescribed; // descending, in [0, 1)
    std::uint64_t seed = 0;
};

/// Throws InvalidSpec when a field is out of range.
void validate(const RandomSpec& spec);

ComplexMatrix random_matrix(const RandomSpec& spec);

/// Same generators, but drawing from a caller-owned stream (used by the
/// conjecture search to run many matrices off one trial seed).
ComplexMatrix random_matrix(const RandomSpec& spec, Rng& rng);

/// Haar-style random unitary: Gram-Schmidt orthonormalization of an
/// iid complex Gaussian matrix.
ComplexMatrix random_unitary(int n, Rng& rng);

/// Gaussian matrix with iid standard complex entries.
ComplexMatrix gaussian_matrix(int n, Rng& rng);

} // namespace harnack
