#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "harnack/bound_formulas.hpp"
#include "harnack/complex_matrix.hpp"
#include "harnack/random_matrix.hpp"

namespace harnack {

/// min_slack below this counts as a candidate violation. Looser than the
/// check tolerance so numerical noise near zero slack is never reported
/// as a counterexample.
inline constexpr double kViolationThreshold = -1e-8;

/// One candidate matrix with its per-index conjecture slacks
/// slack_j = lambda_j(Re((I-A)^{-1})) - lambda_j((I+|A|)^{-1}).
/// The conjecture asserts every slack is non-negative.
struct ConjectureRecord {
    ComplexMatrix matrix;
    std::vector<double> slacks;
    double min_slack = 0.0;
    int min_j = 1; // 1-based argmin
    double norm_slack = 0.0; // ||Re((I-A)^{-1})|| - ||(I+|A|)^{-1}||
    std::uint64_t trial_seed = 0;
};
ConjectureRecord j_conjecture_slack(const ComplexMatrix& a, double margin = kDefaultMargin);

/// Tests the two Loewner-order strengthenings that fail in general:
/// (I-A*)^{-1} + (I-A)^{-1} <= 2(I-|A|)^{-1} and >= 2(I+|A|)^{-1}.
struct LoewnerCheck {
    ComplexMatrix upper_diff; // 2(I-|A|)^{-1} - sum
    ComplexMatrix lower_diff; // sum - 2(I+|A|)^{-1}
    double upper_min_eig = 0.0;
    double lower_min_eig = 0.0;
    bool upper_order_holds = false; // psd within 1e-10
    bool lower_order_holds = false;
};
LoewnerCheck loewner_counterexample_check(const ComplexMatrix& a,
                                          double margin = kDefaultMargin);

/// The proved (unconditional) weakenings of the conjecture, per j:
///   weak_j:       lambda_j(Re((I-A)^{-1})) >= 1/(1+r_{n-j+1}) - (r_1^2 - r_{n-j+1}^2)/(2(1+r_{n-j+1})^2)
///   weak_j_alt:   lambda_j(Re((I-A)^{-1})) >= 1/(1+r_1) + (r_1^2 - r_{n-j+1}^2)/(2(1+r_1)^2)
///   weak_harnack: lambda_j(H(A)) >= (1 - r_{n-j+1}^2)/(1+r_1)^2
/// plus the j = 1 norm form (weak_norm).
struct WeakBoundRow {
    double resolvent_eig = 0.0;
    double weak_j_bound = 0.0;
    double weak_j_alt_bound = 0.0;
    double harnack_eig = 0.0;
    double weak_harnack_bound = 0.0;
    bool weak_j_ok = true;
    bool weak_j_alt_ok = true;
    bool weak_harnack_ok = true;
};
struct WeakBoundsReport {
    std::vector<WeakBoundRow> rows;
    double norm_value = 0.0;      // ||Re((I-A)^{-1})||
    double weak_norm_bound = 0.0;
    bool weak_norm_ok = true;
    bool all_ok = true;
};
WeakBoundsReport weak_bounds_check(const ComplexMatrix& a, double tol = kDefaultTol,
                                   double margin = kDefaultMargin);

/// Settled special cases of the conjecture: normal contractions (all j),
/// j = n (always), and j = 1 for singular contractions.
struct SpecialCaseReport {
    bool is_normal = false;
    bool is_singular = false;
    std::vector<double> slacks;
    bool normal_ok = true;       // meaningful when is_normal
    bool last_index_ok = true;   // slack at j = n
    bool singular_top_ok = true; // meaningful when is_singular
    double singular_target = 0.0; // lambda_1((I+|A|)^{-1}); equals 1 when r_n = 0
};
SpecialCaseReport special_case_check(const ComplexMatrix& a, double tol = kDefaultTol,
                                     double margin = kDefaultMargin);

/// Would the norm conjecture follow from the spectrum alone? Computes
/// max over eigenvalues of Re((1-lambda)^{-1}), the required threshold
/// 1/(1+r_n), and the actual norm ||Re((I-A)^{-1})||. The spectral route
/// fails for some matrices even though the norm inequality may hold.
struct ResolventSpectrumCheck {
    double max_re_resolvent = 0.0;
    double threshold = 0.0;
    double norm_value = 0.0;
    bool spectral_route_holds = false;
};
ResolventSpectrumCheck resolvent_spectrum_check(const ComplexMatrix& a);

/// Randomized search plus local descent over the conjecture slack.
struct SearchConfig {
    int n = 3;
    long trials = 1000;
    std::uint64_t seed = 0;
    std::vector<RandomMode> modes; // empty = all modes, cycled per trial
    int descent_steps = 0;
    double descent_scale = 0.05;
    double margin = kDefaultMargin;
};

struct ModeHistogram {
    long count = 0;
    double min_slack = 0.0;
    double mean_slack = 0.0;
    /// Counts of min_slack in the fixed bins
    /// (-inf,-1e-8), [-1e-8,1e-6), [1e-6,1e-4), [1e-4,1e-2), [1e-2,1e-1), [1e-1,inf).
    std::array<long, 6> bins{};
};

struct SearchSummary {
    SearchConfig config;
    ConjectureRecord best;
    long trials_completed = 0;
    std::map<std::string, ModeHistogram> histogram;
    bool violation_found = false;
    long descent_accepted = 0;
    double final_step_scale = 0.0;
    /// (trial, min_slack) stream for CSV output; filled when requested.
    std::optional<std::vector<std::pair<long, double>>> trace;
};

SearchSummary search(const SearchConfig& config, bool record_trace = false);

} // namespace harnack
