#pragma once

#include <optional>
#include <string>
#include <vector>

#include "harnack/complex_matrix.hpp"
#include "harnack/index_set.hpp"
#include "harnack/report.hpp"

namespace harnack {

/// One expected value from the published reference material, with the
/// tolerance justified by how the source prints it: 1e-4 when the source
/// matrix is given exactly enough for four-decimal agreement, 1e-3 when
/// the matrix entries themselves are rounded, 1e-12 for exact rational
/// witnesses.
struct ExpectedValue {
    std::string name;
    CheckKind kind = CheckKind::Value;
    double value = 0.0;
    double tolerance = 0.0;
};

/// A published numerical witness: either a concrete matrix or a bare
/// singular-value list with an index set (for the bound-lattice
/// witnesses, which need no matrix at all).
struct PaperExample {
    std::string id;
    std::string source;
    std::optional<ComplexMatrix> matrix;
    /// Exact rational singular values as (num, den) pairs, descending.
    std::optional<std::vector<std::pair<long long, long long>>> sv_rational;
    std::optional<IndexSet> index_set;
    std::vector<ExpectedValue> expected;
};

const std::vector<PaperExample>& reference_examples();

/// Runs every check of one example. `tolerance_override`, when set,
/// replaces each expected value's own tolerance (used to demonstrate
/// that four-decimal reference values do not carry fake precision).
std::vector<CheckResult> evaluate_example(const PaperExample& example,
                                          std::optional<double> tolerance_override = std::nullopt);

std::vector<CheckResult> evaluate_all_examples();

} // namespace harnack
