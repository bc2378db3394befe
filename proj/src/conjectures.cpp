#include "harnack/conjectures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "harnack/eigen.hpp"
#include "harnack/harnack.hpp"
#include "harnack/lu.hpp"

namespace harnack {

namespace {

ComplexMatrix resolvent_real_part(const ComplexMatrix& a) {
    const ComplexMatrix eye = ComplexMatrix::identity(a.dim());
    return real_part(inverse(eye - a));
}

int histogram_bin(double min_slack) {
    if (min_slack < -1e-8) return 0;
    if (min_slack < 1e-6) return 1;
    if (min_slack < 1e-4) return 2;
    if (min_slack < 1e-2) return 3;
    if (min_slack < 1e-1) return 4;
    return 5;
}

} // namespace

ConjectureRecord j_conjecture_slack(const ComplexMatrix& a, double margin) {
    const int n = a.dim();
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);

    const std::vector<double> lambda = hermitian_eigenvalues(resolvent_real_part(a));
    ConjectureRecord rec;
    rec.matrix = a;
    rec.slacks.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const double target = 1.0 / (1.0 + r[static_cast<size_t>(n - j)]); // lambda_j((I+|A|)^{-1})
        rec.slacks[static_cast<size_t>(j - 1)] = lambda[static_cast<size_t>(j - 1)] - target;
    }
    const auto it = std::min_element(rec.slacks.begin(), rec.slacks.end());
    rec.min_slack = *it;
    rec.min_j = static_cast<int>(it - rec.slacks.begin()) + 1;
    // Re((I-A)^{-1}) is positive definite for strict contractions, so its
    // norm is lambda_1; keep the max-|eigenvalue| form for robustness.
    rec.norm_slack = std::max(std::abs(lambda.front()), std::abs(lambda.back())) -
                     1.0 / (1.0 + r.back());
    return rec;
}

LoewnerCheck loewner_counterexample_check(const ComplexMatrix& a, double margin) {
    const int n = a.dim();
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    const ComplexMatrix abs_a = polar_abs(a);
    const ComplexMatrix sum = 2.0 * resolvent_real_part(a); // (I-A*)^{-1} + (I-A)^{-1}

    LoewnerCheck out;
    out.upper_diff = 2.0 * inverse(eye - abs_a) - sum;
    out.lower_diff = sum - 2.0 * inverse(eye + abs_a);
    out.upper_min_eig = hermitian_eigenvalues(real_part(out.upper_diff)).back();
    out.lower_min_eig = hermitian_eigenvalues(real_part(out.lower_diff)).back();
    out.upper_order_holds = out.upper_min_eig >= -1e-10;
    out.lower_order_holds = out.lower_min_eig >= -1e-10;
    return out;
}

WeakBoundsReport weak_bounds_check(const ComplexMatrix& a, double tol, double margin) {
    const int n = a.dim();
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);
    const std::vector<double> res_eigs = hermitian_eigenvalues(resolvent_real_part(a));
    const std::vector<double> h_eigs = hermitian_eigenvalues(harnack_quotient(a));
    const double r1 = r.front();

    WeakBoundsReport rep;
    rep.rows.resize(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        WeakBoundRow& row = rep.rows[static_cast<size_t>(j - 1)];
        const double tail = r[static_cast<size_t>(n - j)]; // r_{n-j+1}
        const double spread = r1 * r1 - tail * tail;
        row.resolvent_eig = res_eigs[static_cast<size_t>(j - 1)];
        row.harnack_eig = h_eigs[static_cast<size_t>(j - 1)];
        row.weak_j_bound = 1.0 / (1.0 + tail) - spread / (2.0 * (1.0 + tail) * (1.0 + tail));
        row.weak_j_alt_bound = 1.0 / (1.0 + r1) + spread / (2.0 * (1.0 + r1) * (1.0 + r1));
        row.weak_harnack_bound = (1.0 - tail * tail) / ((1.0 + r1) * (1.0 + r1));
        row.weak_j_ok = leq_with_tol(row.weak_j_bound, row.resolvent_eig, tol);
        row.weak_j_alt_ok = leq_with_tol(row.weak_j_alt_bound, row.resolvent_eig, tol);
        row.weak_harnack_ok = leq_with_tol(row.weak_harnack_bound, row.harnack_eig, tol);
        rep.all_ok = rep.all_ok && row.weak_j_ok && row.weak_j_alt_ok && row.weak_harnack_ok;
    }
    const double rn = r.back();
    rep.norm_value = std::max(std::abs(res_eigs.front()), std::abs(res_eigs.back()));
    rep.weak_norm_bound = 1.0 / (1.0 + rn) - (r1 * r1 - rn * rn) / (2.0 * (1.0 + rn) * (1.0 + rn));
    rep.weak_norm_ok = leq_with_tol(rep.weak_norm_bound, rep.norm_value, tol);
    rep.all_ok = rep.all_ok && rep.weak_norm_ok;
    return rep;
}

SpecialCaseReport special_case_check(const ComplexMatrix& a, double tol, double margin) {
    const ConjectureRecord rec = j_conjecture_slack(a, margin);
    const std::vector<double> r = singular_values(a);
    const double fro = frobenius_norm(a);

    SpecialCaseReport rep;
    rep.slacks = rec.slacks;
    rep.is_normal =
        frobenius_norm(adjoint(a) * a - a * adjoint(a)) <= 1e-9 * (1.0 + fro * fro);
    rep.is_singular = r.back() <= 1e-9;
    rep.singular_target = 1.0 / (1.0 + r.back());

    rep.last_index_ok = rec.slacks.back() >= -tol;
    rep.normal_ok = !rep.is_normal || rec.min_slack >= -tol;
    rep.singular_top_ok = !rep.is_singular || rec.slacks.front() >= -tol;
    return rep;
}

ResolventSpectrumCheck resolvent_spectrum_check(const ComplexMatrix& a) {
    const std::vector<double> r = singular_values(a);
    const std::vector<Complex> eigs = general_eigenvalues(a);

    ResolventSpectrumCheck out;
    out.max_re_resolvent = -std::numeric_limits<double>::infinity();
    for (const Complex& lam : eigs) {
        const Complex denom = Complex(1.0, 0.0) - lam;
        if (std::abs(denom) < 1e-14)
            throw SingularMatrix("1 is an eigenvalue of A; the resolvent is undefined");
        out.max_re_resolvent = std::max(out.max_re_resolvent, (1.0 / denom).real());
    }
    out.threshold = 1.0 / (1.0 + r.back());
    out.norm_value = hermitian_spectral_norm(resolvent_real_part(a));
    out.spectral_route_holds = out.max_re_resolvent >= out.threshold - 1e-12;
    return out;
}

namespace {

// Spread spectrum for the prescribed modes: top value pinned near the
// contraction boundary, bottom pushed toward zero. The published
// near-violations came from exactly this shape.
std::vector<double> spread_spectrum(int n, double top, Rng& rng) {
    std::vector<double> sigma(static_cast<size_t>(n));
    sigma[0] = top;
    for (int i = 1; i + 1 < n; ++i) {
        const double u = rng.uniform();
        sigma[static_cast<size_t>(i)] = top * u * u;
    }
    if (n > 1) {
        const double u = rng.uniform();
        sigma[static_cast<size_t>(n - 1)] = top * u * u * u * u;
    }
    std::sort(sigma.begin(), sigma.end(), std::greater<double>());
    return sigma;
}

ComplexMatrix trial_matrix(int n, RandomMode mode, double margin, Rng& rng) {
    const double ceiling = 1.0 - margin;
    RandomSpec spec;
    spec.n = n;
    spec.mode = mode;
    switch (mode) {
        case RandomMode::GaussianScaled:
        case RandomMode::Hermitian:
        case RandomMode::Normal:
            spec.max_norm = ceiling * std::pow(rng.uniform(), 0.25);
            break;
        case RandomMode::PrescribedSingularValues:
        case RandomMode::SingularContraction: {
            const double top = ceiling * std::pow(rng.uniform(), 0.125);
            spec.max_norm = std::max(top, 1e-3);
            spec.prescribed = spread_spectrum(n, top, rng);
            break;
        }
    }
    if (spec.max_norm <= 0.0) spec.max_norm = 1e-3; // degenerate uniform draw
    return random_matrix(spec, rng);
}

void accumulate(ModeHistogram& h, double min_slack) {
    h.mean_slack = (h.mean_slack * static_cast<double>(h.count) + min_slack) /
                   static_cast<double>(h.count + 1);
    h.min_slack = h.count == 0 ? min_slack : std::min(h.min_slack, min_slack);
    ++h.count;
    ++h.bins[static_cast<size_t>(histogram_bin(min_slack))];
}

} // namespace

SearchSummary search(const SearchConfig& config, bool record_trace) {
    if (config.n < 1) throw InvalidSpec("search dimension must be at least 1");
    if (config.trials < 1) throw InvalidSpec("search needs at least one trial");
    if (!(config.margin > 0.0)) throw InvalidSpec("margin must be positive");
    if (config.descent_steps < 0) throw InvalidSpec("descent step count must be non-negative");
    if (!(config.descent_scale > 0.0)) throw InvalidSpec("descent scale must be positive");

    const std::vector<RandomMode>& modes =
        config.modes.empty() ? all_random_modes() : config.modes;

    SearchSummary summary;
    summary.config = config;
    summary.config.modes = modes;
    if (record_trace) summary.trace.emplace();

    bool have_best = false;
    for (long t = 0; t < config.trials; ++t) {
        const RandomMode mode = modes[static_cast<size_t>(t) % modes.size()];
        const std::uint64_t trial_seed = derive_seed(config.seed, static_cast<std::uint64_t>(t));
        Rng rng(trial_seed);
        const ComplexMatrix a = trial_matrix(config.n, mode, config.margin, rng);
        ConjectureRecord rec = j_conjecture_slack(a, config.margin);
        rec.trial_seed = trial_seed;

        accumulate(summary.histogram[to_string(mode)], rec.min_slack);
        if (summary.trace) summary.trace->emplace_back(t, rec.min_slack);
        if (!have_best || rec.min_slack < summary.best.min_slack) {
            summary.best = std::move(rec);
            have_best = true;
        }
        ++summary.trials_completed;
    }

    // Local refinement: random perturbations projected back inside the
    // contraction ball, accepting only strict improvements.
    double step = config.descent_scale;
    int consecutive_rejects = 0;
    Rng descent_rng(derive_seed(config.seed, 0x6465736365ULL));
    for (int i = 0; i < config.descent_steps; ++i) {
        ComplexMatrix candidate = summary.best.matrix;
        const int n = candidate.dim();
        for (int row = 0; row < n; ++row)
            for (int col = 0; col < n; ++col)
                candidate(row, col) += step * descent_rng.complex_gaussian();
        const double top = singular_values(candidate).front();
        const double ceiling = 1.0 - config.margin;
        if (top > ceiling) candidate *= Complex(ceiling / top, 0.0);

        bool accepted = false;
        try {
            ConjectureRecord rec = j_conjecture_slack(candidate, config.margin);
            if (rec.min_slack < summary.best.min_slack) {
                rec.trial_seed = summary.best.trial_seed;
                summary.best = std::move(rec);
                accepted = true;
            }
        } catch (const NotContractive&) {
            // projection landed a hair outside the margin; treat as reject
        }
        if (accepted) {
            ++summary.descent_accepted;
            consecutive_rejects = 0;
        } else if (++consecutive_rejects >= 20) {
            step *= 0.5;
            consecutive_rejects = 0;
        }
    }
    summary.final_step_scale = step;
    summary.violation_found = summary.best.min_slack < kViolationThreshold;
    return summary;
}

} // namespace harnack
