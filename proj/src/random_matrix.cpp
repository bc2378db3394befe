#include "harnack/random_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "harnack/eigen.hpp"

namespace harnack {

RandomMode random_mode_from_string(const std::string& name) {
    if (name == "gaussian-scaled") return RandomMode::GaussianScaled;
    if (name == "prescribed-singular-values" || name == "prescribed")
        return RandomMode::PrescribedSingularValues;
    if (name == "hermitian") return RandomMode::Hermitian;
    if (name == "normal") return RandomMode::Normal;
    if (name == "singular-contraction") return RandomMode::SingularContraction;
    throw InvalidSpec("unknown random mode: " + name);
}

std::string to_string(RandomMode mode) {
    switch (mode) {
        case RandomMode::GaussianScaled: return "gaussian-scaled";
        case RandomMode::PrescribedSingularValues: return "prescribed-singular-values";
        case RandomMode::Hermitian: return "hermitian";
        case RandomMode::Normal: return "normal";
        case RandomMode::SingularContraction: return "singular-contraction";
    }
    throw InvalidSpec("unknown random mode");
}

const std::vector<RandomMode>& all_random_modes() {
    static const std::vector<RandomMode> modes = {
        RandomMode::GaussianScaled, RandomMode::PrescribedSingularValues, RandomMode::Hermitian,
        RandomMode::Normal, RandomMode::SingularContraction};
    return modes;
}

void validate(const RandomSpec& spec) {
    if (spec.n < 1) throw InvalidSpec("dimension must be at least 1");
    if (!(spec.max_norm > 0.0 && spec.max_norm < 1.0))
        throw InvalidSpec("max_norm must lie in (0, 1)");
    if (spec.prescribed) {
        const auto& p = *spec.prescribed;
        if (static_cast<int>(p.size()) != spec.n)
            throw InvalidSpec("prescribed singular-value list must have length n");
        for (size_t i = 0; i < p.size(); ++i) {
            if (!(p[i] >= 0.0 && p[i] < 1.0))
                throw InvalidSpec("prescribed singular values must lie in [0, 1)");
            if (i > 0 && p[i] > p[i - 1])
                throw InvalidSpec("prescribed singular values must be sorted descending");
        }
    } else if (spec.mode == RandomMode::PrescribedSingularValues) {
        throw InvalidSpec("prescribed-singular-values mode requires a value list");
    }
}

ComplexMatrix gaussian_matrix(int n, Rng& rng) {
    ComplexMatrix g(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g(i, j) = rng.complex_gaussian();
    return g;
}

ComplexMatrix random_unitary(int n, Rng& rng) {
    ComplexMatrix g = gaussian_matrix(n, rng);
    // Modified Gram-Schmidt on columns, with one re-orthogonalization
    // pass. Degenerate columns (measure zero) are redrawn.
    for (int j = 0; j < n; ++j) {
        for (int attempt = 0;; ++attempt) {
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i < j; ++i) {
                    Complex dot(0.0, 0.0);
                    for (int r = 0; r < n; ++r) dot += std::conj(g(r, i)) * g(r, j);
                    for (int r = 0; r < n; ++r) g(r, j) -= dot * g(r, i);
                }
            }
            double norm_sq = 0.0;
            for (int r = 0; r < n; ++r) norm_sq += std::norm(g(r, j));
            const double norm = std::sqrt(norm_sq);
            if (norm > 1e-8) {
                for (int r = 0; r < n; ++r) g(r, j) /= norm;
                break;
            }
            if (attempt > 8) throw ConvergenceFailure("random unitary generation degenerated");
            for (int r = 0; r < n; ++r) g(r, j) = rng.complex_gaussian();
        }
    }
    return g;
}

namespace {

ComplexMatrix from_prescribed(const std::vector<double>& sigma, int n, Rng& rng) {
    const ComplexMatrix u = random_unitary(n, rng);
    const ComplexMatrix v = random_unitary(n, rng);
    // U diag(sigma) V*
    ComplexMatrix scaled(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) scaled(i, j) = u(i, j) * sigma[static_cast<size_t>(j)];
    return scaled * adjoint(v);
}

ComplexMatrix scaled_to_norm(ComplexMatrix a, double target) {
    const double top = singular_values(a).front();
    if (top == 0.0) throw InvalidSpec("cannot rescale a zero matrix to a positive norm");
    return a *= Complex(target / top, 0.0);
}

} // namespace

ComplexMatrix random_matrix(const RandomSpec& spec, Rng& rng) {
    validate(spec);
    const int n = spec.n;
    switch (spec.mode) {
        case RandomMode::GaussianScaled:
            return scaled_to_norm(gaussian_matrix(n, rng), spec.max_norm);
        case RandomMode::PrescribedSingularValues:
            return from_prescribed(*spec.prescribed, n, rng);
        case RandomMode::Hermitian:
            return scaled_to_norm(real_part(gaussian_matrix(n, rng)), spec.max_norm);
        case RandomMode::Normal: {
            std::vector<Complex> d(static_cast<size_t>(n));
            double top = 0.0;
            for (auto& z : d) {
                z = rng.complex_gaussian();
                top = std::max(top, std::abs(z));
            }
            if (top == 0.0) {
                d[0] = Complex(1.0, 0.0);
                top = 1.0;
            }
            for (auto& z : d) z *= spec.max_norm / top;
            const ComplexMatrix u = random_unitary(n, rng);
            return u * ComplexMatrix::diagonal(d) * adjoint(u);
        }
        case RandomMode::SingularContraction: {
            std::vector<double> sigma;
            if (spec.prescribed) {
                sigma = *spec.prescribed;
            } else {
                sigma.resize(static_cast<size_t>(n));
                sigma[0] = spec.max_norm;
                for (int i = 1; i + 1 < n; ++i) sigma[static_cast<size_t>(i)] = spec.max_norm * rng.uniform();
                std::sort(sigma.begin(), sigma.end(), std::greater<double>());
            }
            sigma.back() = 0.0;
            return from_prescribed(sigma, n, rng);
        }
    }
    throw InvalidSpec("unknown random mode");
}

ComplexMatrix random_matrix(const RandomSpec& spec) {
    Rng rng(spec.seed);
    return random_matrix(spec, rng);
}

} // namespace harnack
