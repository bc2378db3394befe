#include "harnack/harnack.hpp"

#include <cmath>

#include "harnack/eigen.hpp"
#include "harnack/lu.hpp"

namespace harnack {

void require_strict_contraction(const std::vector<double>& sv, double margin) {
    if (sv.empty() || 1.0 - sv.front() < margin)
        throw NotContractive("largest singular value " +
                             (sv.empty() ? std::string("(empty)") : std::to_string(sv.front())) +
                             " violates the strict-contraction margin");
}

ComplexMatrix harnack_quotient(const ComplexMatrix& a) {
    const int n = a.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    ComplexMatrix minv;
    try {
        minv = inverse(eye - a);
    } catch (const SingularMatrix&) {
        throw SingularMatrix("1 is an eigenvalue of A; the Harnack quotient is undefined");
    }
    const ComplexMatrix h = adjoint(minv) * (eye - adjoint(a) * a) * minv;
    return real_part(h); // mathematically Hermitian; kill rounding skew
}

IdentityResiduals identity_residuals(const ComplexMatrix& a, double margin) {
    const int n = a.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    ComplexMatrix minv;
    try {
        minv = inverse(eye - a);
    } catch (const SingularMatrix&) {
        throw SingularMatrix("1 is an eigenvalue of A; identity forms are undefined");
    }
    const ComplexMatrix h = real_part(adjoint(minv) * (eye - adjoint(a) * a) * minv);

    IdentityResiduals out;
    out.scale = 1.0 + frobenius_norm(h);
    out.expz = distance(h, 2.0 * real_part(minv) - eye);
    out.exp2 = distance(h, 2.0 * real_part(minv - 0.5 * eye));
    out.fan = distance(h, real_part((eye + a) * minv));
    const std::vector<double> sv = singular_values(a);
    if (1.0 - sv.front() >= margin) {
        const ComplexMatrix s = sqrt_psd(eye - adjoint(a) * a) * minv;
        out.exp3 = distance(h, adjoint(s) * s);
    }
    return out;
}

TungReport tung_check(const ComplexMatrix& z, const ComplexMatrix& u, double margin) {
    detail::require_same_dim(z, u, "tung_check");
    const std::vector<double> r = singular_values(z);
    require_strict_contraction(r, margin);
    const int n = z.dim();
    const ComplexMatrix eye = ComplexMatrix::identity(n);
    if (frobenius_norm(adjoint(u) * u - eye) > 1e-9)
        throw NotUnitary("U fails the unitarity check");

    TungReport rep;
    rep.lower = 1.0;
    rep.upper = 1.0;
    for (double rk : r) {
        rep.lower *= (1.0 - rk) / (1.0 + rk);
        rep.upper *= (1.0 + rk) / (1.0 - rk);
    }
    const Complex num = determinant(eye - adjoint(z) * z); // real for Hermitian argument
    const Complex den = determinant(eye - u * z);
    rep.middle = num.real() / std::norm(den);

    rep.equality_side = "none";
    if (std::abs(rep.middle - rep.upper) <= 1e-9 * rep.upper)
        rep.equality_side = "right";
    else if (std::abs(rep.middle - rep.lower) <= 1e-9 * rep.lower)
        rep.equality_side = "left";
    return rep;
}

std::vector<EigenBoundRow> eigen_bound_rows(const ComplexMatrix& a, double margin) {
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);
    const std::vector<double> lambda = hermitian_eigenvalues(harnack_quotient(a));
    std::vector<EigenBoundRow> rows(lambda.size());
    for (size_t j = 0; j < lambda.size(); ++j) {
        rows[j].lambda = lambda[j];
        rows[j].bound = (1.0 + r[j]) / (1.0 - r[j]);
    }
    return rows;
}

BoundReport bound_report(const ComplexMatrix& a, const IndexSet& s, double tol, double margin,
                         const std::string& matrix_id) {
    const int n = a.dim();
    s.require_valid_for(n);
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);
    const std::vector<double> lambda = hermitian_eigenvalues(harnack_quotient(a));

    BoundReport rep;
    rep.matrix_id = matrix_id;
    rep.index_set = s;
    rep.lhs = 1.0;
    rep.lhs_lower = 1.0;
    for (int j = 1; j <= s.k(); ++j) {
        rep.lhs *= lambda[static_cast<size_t>(s.index(j) - 1)];
        rep.lhs_lower *= lambda[static_cast<size_t>(n - s.index(j))];
    }

    rep.upper_bounds["R1"] = bounds::r1_upper(r, s);
    rep.upper_bounds["R2"] = bounds::r2_upper(r, s);
    rep.upper_bounds["R3"] = bounds::r3_upper(r, s);
    rep.upper_bounds["R4"] = bounds::r4_upper(r, s);
    rep.upper_bounds["R5"] = bounds::r5_upper(r, s);
    rep.lower_bounds["Jb"] = bounds::jb_lower(r, s);
    rep.lower_bounds["Jb_swapped"] = bounds::jb_swapped_lower(r, s);
    rep.lower_bounds["JbX"] = bounds::jbx_lower(r, s);
    rep.lower_bounds["JbY"] = bounds::jby_lower(r, s);
    rep.lower_bounds["fan_lower"] = bounds::fan_lower(r, s);

    for (const auto& [name, bound] : rep.upper_bounds) {
        rep.slacks[name] = bound - rep.lhs;
        const bool ok = leq_with_tol(rep.lhs, bound, tol);
        rep.verdict[name] = ok;
        rep.all_pass = rep.all_pass && ok;
    }
    for (const auto& [name, bound] : rep.lower_bounds) {
        rep.slacks[name] = rep.lhs_lower - bound;
        const bool ok = leq_with_tol(bound, rep.lhs_lower, tol);
        rep.verdict[name] = ok;
        rep.all_pass = rep.all_pass && ok;
    }
    return rep;
}

std::vector<NaiveLowerRow> naive_lower_bound_check(const ComplexMatrix& a, double tol,
                                                   double margin) {
    const int n = a.dim();
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);
    const std::vector<double> lambda = hermitian_eigenvalues(harnack_quotient(a));
    const double r1 = r.front();

    std::vector<NaiveLowerRow> rows(static_cast<size_t>(n));
    for (int j = 1; j <= n; ++j) {
        NaiveLowerRow& row = rows[static_cast<size_t>(j - 1)];
        const double rj = r[static_cast<size_t>(j - 1)];
        const double tail = r[static_cast<size_t>(n - j)]; // r_{n-j+1}
        row.lambda = lambda[static_cast<size_t>(j - 1)];
        row.naive_bound = (1.0 - rj) / (1.0 + rj);
        row.naive_violated = !leq_with_tol(row.naive_bound, row.lambda, tol);
        row.valid_tail = (1.0 - tail * tail) / ((1.0 + r1) * (1.0 + r1));
        row.valid_swapped = (1.0 - r1 * r1) / ((1.0 + tail) * (1.0 + tail));
        row.valid_tail_ok = leq_with_tol(row.valid_tail, row.lambda, tol);
        row.valid_swapped_ok = leq_with_tol(row.valid_swapped, row.lambda, tol);
    }
    return rows;
}

MultiMatrixReport multi_matrix_bound(const ComplexMatrix& a, const ComplexMatrix& b,
                                     const IndexSet& s, double tol, double margin) {
    detail::require_same_dim(a, b, "multi_matrix_bound");
    const int n = a.dim();
    s.require_valid_for(n);
    const ComplexMatrix eye = ComplexMatrix::identity(n);

    const ComplexMatrix ainv = inverse(a); // SingularMatrix if A singular
    const ComplexMatrix ratio = b * ainv;
    const std::vector<double> sv_ratio = singular_values(ratio);
    if (1.0 - sv_ratio.front() < margin)
        throw DomainViolation("||B A^{-1}|| must be below 1 with margin");

    const std::vector<double> sv_a = singular_values(a);
    const std::vector<double> sv_b = singular_values(b);
    const double sigma_n_a = sv_a.back();
    if (sigma_n_a - sv_b.front() <= 0.0)
        throw DomainViolation("bound requires sigma_1(B) < sigma_n(A)");

    const ComplexMatrix diff = a - b;
    ComplexMatrix diff_inv;
    try {
        diff_inv = inverse(diff);
    } catch (const SingularMatrix&) {
        throw SingularMatrix("A - B is singular");
    }
    const ComplexMatrix middle =
        real_part(adjoint(diff_inv) * (adjoint(a) * a - adjoint(b) * b) * diff_inv);
    const ComplexMatrix closed_form = 2.0 * real_part(inverse(eye - ratio)) - eye;

    MultiMatrixReport rep;
    rep.residual_scale = 1.0 + frobenius_norm(middle);
    rep.identity_residual = distance(middle, closed_form);

    const std::vector<double> lambda = hermitian_eigenvalues(middle);
    rep.lhs = 1.0;
    rep.rhs = 1.0;
    for (int j = 1; j <= s.k(); ++j) {
        rep.lhs *= lambda[static_cast<size_t>(s.index(j) - 1)];
        const double sb = sv_b[static_cast<size_t>(j - 1)];
        rep.rhs *= (sigma_n_a + sb) / (sigma_n_a - sb);
    }
    rep.holds = leq_with_tol(rep.lhs, rep.rhs, tol);
    return rep;
}

} // namespace harnack
