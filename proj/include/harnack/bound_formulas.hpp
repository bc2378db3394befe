#pragma once

#include <vector>

#include "harnack/index_set.hpp"

namespace harnack {

/// The five upper-bound families and the lower-bound family for the
/// partial eigenvalue products of the Harnack quotient, as functions of
/// the singular-value list r (descending, r[0] = r_1) and an index set.
///
/// Templated over the scalar so the same formulas run in doubles for
/// reports and in exact rationals for the witness checks. Position j
/// below is 1-based, matching the index-set convention.
namespace bounds {

template <class S>
S r1_upper(const std::vector<S>& r, const IndexSet& s) {
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& ri = r[static_cast<size_t>(s.index(j) - 1)];
        acc = acc * ((S{1} + ri) / (S{1} - ri));
    }
    return acc;
}

template <class S>
S r2_upper(const std::vector<S>& r, const IndexSet& s) {
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& rj = r[static_cast<size_t>(j - 1)];
        acc = acc * ((S{1} + rj) / (S{1} - rj));
    }
    return acc;
}

template <class S>
S r3_upper(const std::vector<S>& r, const IndexSet& s) {
    const int n = static_cast<int>(r.size());
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& tail = r[static_cast<size_t>(n - j)];        // r_{n-j+1}
        const S& ri = r[static_cast<size_t>(s.index(j) - 1)]; // r_{i_j}
        acc = acc * ((S{1} - tail * tail) / ((S{1} - ri) * (S{1} - ri)));
    }
    return acc;
}

template <class S>
S r4_upper(const std::vector<S>& r, const IndexSet& s) {
    const int n = static_cast<int>(r.size());
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& tail = r[static_cast<size_t>(n - s.index(j))]; // r_{n-i_j+1}
        const S& rj = r[static_cast<size_t>(j - 1)];
        acc = acc * ((S{1} - tail * tail) / ((S{1} - rj) * (S{1} - rj)));
    }
    return acc;
}

template <class S>
S r5_upper(const std::vector<S>& r, const IndexSet& s) {
    const int n = static_cast<int>(r.size());
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& tail = r[static_cast<size_t>(n - j)]; // r_{n-j+1}
        const S& rj = r[static_cast<size_t>(j - 1)];
        acc = acc * ((S{1} - tail * tail) / ((S{1} - rj) * (S{1} - rj)));
    }
    return acc;
}

/// Lower bound prod (1 - r_{i_j}^2) / (1 + r_j)^2.
template <class S>
S jb_lower(const std::vector<S>& r, const IndexSet& s) {
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& ri = r[static_cast<size_t>(s.index(j) - 1)];
        const S& rj = r[static_cast<size_t>(j - 1)];
        acc = acc * ((S{1} - ri * ri) / ((S{1} + rj) * (S{1} + rj)));
    }
    return acc;
}

/// Swapped variant prod (1 - r_j^2) / (1 + r_{i_j})^2.
template <class S>
S jb_swapped_lower(const std::vector<S>& r, const IndexSet& s) {
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& ri = r[static_cast<size_t>(s.index(j) - 1)];
        const S& rj = r[static_cast<size_t>(j - 1)];
        acc = acc * ((S{1} - rj * rj) / ((S{1} + ri) * (S{1} + ri)));
    }
    return acc;
}

/// Per-factor form of the spectral-norm lower bound, prod (1 - r_{i_j}^2) / (1 + r_1)^2.
template <class S>
S jbx_lower(const std::vector<S>& r, const IndexSet& s) {
    const S& r1 = r.front();
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& ri = r[static_cast<size_t>(s.index(j) - 1)];
        acc = acc * ((S{1} - ri * ri) / ((S{1} + r1) * (S{1} + r1)));
    }
    return acc;
}

/// Swapped per-factor form, prod (1 - r_1^2) / (1 + r_{i_j})^2.
template <class S>
S jby_lower(const std::vector<S>& r, const IndexSet& s) {
    const S& r1 = r.front();
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& ri = r[static_cast<size_t>(s.index(j) - 1)];
        acc = acc * ((S{1} - r1 * r1) / ((S{1} + ri) * (S{1} + ri)));
    }
    return acc;
}

/// The weakest end of the lower chain, prod (1 - r_j) / (1 + r_j).
template <class S>
S fan_lower(const std::vector<S>& r, const IndexSet& s) {
    S acc{1};
    for (int j = 1; j <= s.k(); ++j) {
        const S& rj = r[static_cast<size_t>(j - 1)];
        acc = acc * ((S{1} - rj) / (S{1} + rj));
    }
    return acc;
}

} // namespace bounds

/// Tolerance convention for every inequality check in the library:
/// "x <= y" passes iff x <= y + tol * (1 + |y|).
inline bool leq_with_tol(double x, double y, double tol) {
    return x <= y + tol * (1.0 + (y < 0 ? -y : y));
}

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultMargin = 1e-6;

} // namespace harnack
