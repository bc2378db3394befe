#include "harnack/cayley.hpp"

#include "harnack/eigen.hpp"
#include "harnack/harnack.hpp"
#include "harnack/lu.hpp"

namespace harnack {

namespace {

ComplexMatrix shifted_by_i(const ComplexMatrix& x, double sign) {
    ComplexMatrix out = x;
    for (int i = 0; i < out.dim(); ++i) out(i, i) += Complex(0.0, sign);
    return out;
}

} // namespace

ComplexMatrix cayley(const ComplexMatrix& x) {
    return shifted_by_i(x, -1.0) * inverse(shifted_by_i(x, +1.0));
}

CayleyReport cayley_bounds(const ComplexMatrix& a, const IndexSet& s, double tol, double margin) {
    const int n = a.dim();
    s.require_valid_for(n);
    const std::vector<double> r = singular_values(a);
    require_strict_contraction(r, margin);

    const std::vector<double> c = singular_values(cayley(a));
    CayleyReport rep;
    rep.index_set = s;
    rep.lhs = 1.0;
    rep.lower = 1.0;
    rep.upper = 1.0;
    for (int j = 1; j <= s.k(); ++j) {
        const double ri = r[static_cast<size_t>(s.index(j) - 1)];
        const double rj = r[static_cast<size_t>(j - 1)];
        const double tail = r[static_cast<size_t>(n - s.index(j))]; // s_{n-i_j+1}
        rep.lhs *= c[static_cast<size_t>(s.index(j) - 1)];
        rep.lower *= (1.0 - tail) / (1.0 + rj);
        rep.upper *= (1.0 + ri) / (1.0 - rj);
    }
    rep.verdict = leq_with_tol(rep.lower, rep.lhs, tol) && leq_with_tol(rep.lhs, rep.upper, tol);
    return rep;
}

CayleyReport cayley_difference_bounds(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const IndexSet& s, double tol, double margin) {
    detail::require_same_dim(a, b, "cayley_difference_bounds");
    const int n = a.dim();
    s.require_valid_for(n);
    const std::vector<double> ra = singular_values(a);
    const std::vector<double> rb = singular_values(b);
    require_strict_contraction(ra, margin);
    require_strict_contraction(rb, margin);

    const ComplexMatrix diff = cayley(a) - cayley(b);
    // C(A) - C(B) = 2i (B+iI)^{-1} (A-B) (A+iI)^{-1}
    const ComplexMatrix factored = Complex(0.0, 2.0) * (inverse(shifted_by_i(b, +1.0)) *
                                                        (a - b) * inverse(shifted_by_i(a, +1.0)));
    const std::vector<double> d = singular_values(diff);
    const std::vector<double> ab = singular_values(a - b);

    CayleyReport rep;
    rep.index_set = s;
    rep.lower_bound_form = "corrected";
    rep.factorization_residual = distance(diff, factored);
    rep.lhs = 1.0;
    rep.lower = 1.0;
    rep.upper = 1.0;
    for (int j = 1; j <= s.k(); ++j) {
        const double dij = ab[static_cast<size_t>(s.index(j) - 1)];
        const double sa = ra[static_cast<size_t>(j - 1)];
        const double sb = rb[static_cast<size_t>(j - 1)];
        rep.lhs *= d[static_cast<size_t>(s.index(j) - 1)];
        rep.upper *= 2.0 * dij / ((1.0 - sa) * (1.0 - sb));
        rep.lower *= 2.0 * dij / ((1.0 + sa) * (1.0 + sb));
    }
    rep.verdict = leq_with_tol(rep.lower, rep.lhs, tol) && leq_with_tol(rep.lhs, rep.upper, tol);
    return rep;
}

std::vector<FanHoffmanRow> fan_hoffman_rows(const ComplexMatrix& a, const ComplexMatrix& b,
                                            double tol, double margin) {
    detail::require_same_dim(a, b, "fan_hoffman_rows");
    const double herm_tol = 1e-10;
    if (frobenius_norm(a - adjoint(a)) > herm_tol * (1.0 + frobenius_norm(a)) ||
        frobenius_norm(b - adjoint(b)) > herm_tol * (1.0 + frobenius_norm(b)))
        throw NotHermitian("the per-j Cayley difference bound requires Hermitian inputs");
    require_strict_contraction(singular_values(a), margin);
    require_strict_contraction(singular_values(b), margin);

    const std::vector<double> d = singular_values(cayley(a) - cayley(b));
    const std::vector<double> ab = singular_values(a - b);
    std::vector<FanHoffmanRow> rows(d.size());
    for (size_t j = 0; j < d.size(); ++j) {
        rows[j].sigma_diff = d[j];
        rows[j].sigma_bound = 2.0 * ab[j];
        rows[j].ok = leq_with_tol(rows[j].sigma_diff, rows[j].sigma_bound, tol);
    }
    return rows;
}

} // namespace harnack
