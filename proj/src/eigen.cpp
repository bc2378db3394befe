#include "harnack/eigen.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

namespace harnack {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kJacobiOffTol = 1e-14;
constexpr double kQrDeflateTol = 1e-13;
constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_mass(const ComplexMatrix& h) {
    const int n = h.dim();
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            if (p != q) s += std::norm(h(p, q));
    return std::sqrt(s);
}

void require_hermitian(const ComplexMatrix& h) {
    const double skew = frobenius_norm(h - adjoint(h));
    if (skew > kHermitianTol * (1.0 + frobenius_norm(h)))
        throw NotHermitian("matrix is not Hermitian within tolerance");
}

// One cyclic Jacobi pass over all p < q. Rotations are the complex
// Givens form diag(e^{i theta}, 1) * [[c, s], [-s, c]] on the (p, q)
// plane, annihilating h(p, q) exactly.
void jacobi_sweep(ComplexMatrix& h, ComplexMatrix* v) {
    const int n = h.dim();
    for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex b = h(p, q);
            const double beta = std::abs(b);
            if (beta == 0.0) continue;
            const Complex phase = b / beta; // e^{i theta}
            const double app = h(p, p).real();
            const double aqq = h(q, q).real();
            const double tau = (aqq - app) / (2.0 * beta);
            const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;
            const Complex cp = c * phase;
            const Complex sp = s * phase;

            // Column update: H <- H R with R(p,p)=c*phase, R(q,p)=-s,
            // R(p,q)=s*phase, R(q,q)=c.
            for (int i = 0; i < n; ++i) {
                const Complex hip = h(i, p), hiq = h(i, q);
                h(i, p) = hip * cp - hiq * s;
                h(i, q) = hip * sp + hiq * c;
            }
            // Row update: H <- R* H.
            for (int j = 0; j < n; ++j) {
                const Complex hpj = h(p, j), hqj = h(q, j);
                h(p, j) = std::conj(cp) * hpj - s * hqj;
                h(q, j) = std::conj(sp) * hpj + c * hqj;
            }
            // Clean the annihilated pair and enforce real diagonal.
            h(p, q) = 0.0;
            h(q, p) = 0.0;
            h(p, p) = Complex(h(p, p).real(), 0.0);
            h(q, q) = Complex(h(q, q).real(), 0.0);

            if (v) {
                for (int i = 0; i < n; ++i) {
                    const Complex vip = (*v)(i, p), viq = (*v)(i, q);
                    (*v)(i, p) = vip * cp - viq * s;
                    (*v)(i, q) = vip * sp + viq * c;
                }
            }
        }
    }
}

HermitianEigen jacobi_eigen(const ComplexMatrix& input, bool want_vectors) {
    require_hermitian(input);
    const int n = input.dim();

    // Symmetrize up front so rounding skew in the input cannot leak
    // into the rotations.
    ComplexMatrix h = real_part(input);
    ComplexMatrix v;
    if (want_vectors) v = ComplexMatrix::identity(n);

    const double norm = frobenius_norm(h);
    int sweeps = 0;
    while (norm > 0.0 && off_diagonal_mass(h) > kJacobiOffTol * norm) {
        if (++sweeps > kMaxJacobiSweeps)
            throw ConvergenceFailure("Jacobi eigensolver failed to converge");
        jacobi_sweep(h, want_vectors ? &v : nullptr);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h(a, a).real() > h(b, b).real(); });

    HermitianEigen out;
    out.values.reserve(n);
    for (int i : order) out.values.push_back(h(i, i).real());
    if (want_vectors) {
        out.vectors = ComplexMatrix(n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[j]);
    }
    return out;
}

// Householder reduction to upper Hessenberg form by unitary similarity.
ComplexMatrix hessenberg(ComplexMatrix a) {
    const int n = a.dim();
    for (int k = 0; k + 2 < n; ++k) {
        double xnorm_sq = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm_sq += std::norm(a(i, k));
        const double xnorm = std::sqrt(xnorm_sq);
        if (xnorm == 0.0) continue;

        const Complex x0 = a(k + 1, k);
        const Complex phase = std::abs(x0) == 0.0 ? Complex(1.0, 0.0) : x0 / std::abs(x0);
        const Complex alpha = -phase * xnorm;

        std::vector<Complex> vvec(static_cast<size_t>(n - k - 1));
        vvec[0] = x0 - alpha;
        for (int i = k + 2; i < n; ++i) vvec[static_cast<size_t>(i - k - 1)] = a(i, k);
        double vsq = 0.0;
        for (const auto& z : vvec) vsq += std::norm(z);
        if (vsq == 0.0) continue;
        const double betaf = 2.0 / vsq;

        // A <- P A with P = I - beta v v* acting on rows k+1..n-1.
        for (int j = k; j < n; ++j) {
            Complex w(0.0, 0.0);
            for (int i = k + 1; i < n; ++i) w += std::conj(vvec[static_cast<size_t>(i - k - 1)]) * a(i, j);
            w *= betaf;
            for (int i = k + 1; i < n; ++i) a(i, j) -= vvec[static_cast<size_t>(i - k - 1)] * w;
        }
        // A <- A P acting on columns k+1..n-1.
        for (int i = 0; i < n; ++i) {
            Complex w(0.0, 0.0);
            for (int j = k + 1; j < n; ++j) w += a(i, j) * vvec[static_cast<size_t>(j - k - 1)];
            w *= betaf;
            for (int j = k + 1; j < n; ++j) a(i, j) -= w * std::conj(vvec[static_cast<size_t>(j - k - 1)]);
        }
        for (int i = k + 2; i < n; ++i) a(i, k) = 0.0; // structural zeros
    }
    return a;
}

// One explicit single-shift QR step on the active window [l, m].
void qr_step(ComplexMatrix& h, int l, int m, Complex mu) {
    const int n = h.dim();
    for (int i = l; i <= m; ++i) h(i, i) -= mu;

    std::vector<std::array<Complex, 2>> rot(static_cast<size_t>(m));
    for (int i = l; i < m; ++i) {
        const Complex x = h(i, i);
        const Complex y = h(i + 1, i);
        const double r = std::hypot(std::abs(x), std::abs(y));
        Complex ca(1.0, 0.0), cb(0.0, 0.0);
        if (r > 0.0) {
            ca = x / r;
            cb = y / r;
        }
        rot[static_cast<size_t>(i)] = {ca, cb};
        // Rows i, i+1 <- G [rows], G = [[conj(ca), conj(cb)], [-cb, ca]].
        for (int col = i; col < n; ++col) {
            const Complex t1 = h(i, col), t2 = h(i + 1, col);
            h(i, col) = std::conj(ca) * t1 + std::conj(cb) * t2;
            h(i + 1, col) = -cb * t1 + ca * t2;
        }
        h(i + 1, i) = 0.0;
    }
    for (int i = l; i < m; ++i) {
        const auto [ca, cb] = rot[static_cast<size_t>(i)];
        const int rmax = std::min(i + 2, m);
        // Columns i, i+1 <- [cols] G*.
        for (int row = 0; row <= rmax; ++row) {
            const Complex t1 = h(row, i), t2 = h(row, i + 1);
            h(row, i) = t1 * ca + t2 * cb;
            h(row, i + 1) = -t1 * std::conj(cb) + t2 * std::conj(ca);
        }
    }
    for (int i = l; i <= m; ++i) h(i, i) += mu;
}

Complex wilkinson_shift(const ComplexMatrix& h, int m) {
    const Complex a = h(m - 1, m - 1);
    const Complex b = h(m - 1, m);
    const Complex c = h(m, m - 1);
    const Complex d = h(m, m);
    const Complex delta = (a - d) * 0.5;
    const Complex disc = std::sqrt(delta * delta + b * c);
    const Complex mu1 = d + delta + disc;
    const Complex mu2 = d + delta - disc;
    return std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
}

} // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    return jacobi_eigen(h, false).values;
}

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    return jacobi_eigen(h, true);
}

std::vector<double> singular_values(const ComplexMatrix& a) {
    ComplexMatrix gram = adjoint(a) * a;
    std::vector<double> ev = hermitian_eigenvalues(gram);
    for (double& x : ev) x = std::sqrt(std::max(x, 0.0));
    return ev; // eigenvalues descending implies singular values descending
}

ComplexMatrix sqrt_psd(const ComplexMatrix& h) {
    HermitianEigen eig = hermitian_eigen(h);
    const int n = h.dim();
    std::vector<double> roots(eig.values.size());
    for (size_t i = 0; i < roots.size(); ++i) roots[i] = std::sqrt(std::max(eig.values[i], 0.0));
    // V diag(roots) V*
    ComplexMatrix out(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Complex s(0.0, 0.0);
            for (int k = 0; k < n; ++k)
                s += eig.vectors(i, k) * roots[static_cast<size_t>(k)] * std::conj(eig.vectors(j, k));
            out(i, j) = s;
        }
    return out;
}

ComplexMatrix polar_abs(const ComplexMatrix& a) {
    return sqrt_psd(adjoint(a) * a);
}

std::vector<Complex> general_eigenvalues(const ComplexMatrix& a) {
    const int n = a.dim();
    if (n == 0) return {};
    if (n == 1) return {a(0, 0)};

    ComplexMatrix h = hessenberg(a);
    const double hnorm = frobenius_norm(h);
    const long max_stale = 100L * n * n;

    int m = n - 1;
    long iters_since_deflation = 0;
    while (m > 0) {
        // Scan for a negligible subdiagonal bounding the active block.
        int l = m;
        while (l > 0) {
            double scale = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (scale == 0.0) scale = hnorm;
            if (std::abs(h(l, l - 1)) <= kQrDeflateTol * scale) {
                h(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        if (l == m) {
            --m;
            iters_since_deflation = 0;
            continue;
        }
        if (++iters_since_deflation > max_stale)
            throw ConvergenceFailure("QR eigensolver failed to deflate");

        Complex mu = wilkinson_shift(h, m);
        if (iters_since_deflation % 40 == 0)
            mu = h(m, m) + 0.75 * std::abs(h(m, m - 1)); // exceptional shift
        qr_step(h, l, m, mu);
    }

    std::vector<Complex> ev(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) ev[static_cast<size_t>(i)] = h(i, i);
    sort_eigenvalues(ev);
    return ev;
}

SpectralData spectral_data(const ComplexMatrix& a) {
    return SpectralData{singular_values(a), general_eigenvalues(a)};
}

void sort_eigenvalues(std::vector<Complex>& v) {
    std::stable_sort(v.begin(), v.end(), [](const Complex& a, const Complex& b) {
        const double ma = std::abs(a), mb = std::abs(b);
        if (ma != mb) return ma > mb;
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    // Rounding makes nominally tied moduli differ in the last bits (a
    // computed conjugate pair is rarely an exact conjugate pair), so the
    // tie-breaks run over groups of nearly equal keys.
    const auto near = [](double x, double y) {
        return std::abs(x - y) <= 1e-12 * (1.0 + std::max(std::abs(x), std::abs(y)));
    };
    size_t i = 0;
    while (i < v.size()) {
        size_t j = i + 1;
        while (j < v.size() && near(std::abs(v[j - 1]), std::abs(v[j]))) ++j;
        std::stable_sort(v.begin() + static_cast<long>(i), v.begin() + static_cast<long>(j),
                         [](const Complex& a, const Complex& b) {
                             if (a.real() != b.real()) return a.real() > b.real();
                             return a.imag() > b.imag();
                         });
        size_t p = i;
        while (p < j) {
            size_t q = p + 1;
            while (q < j && near(v[q - 1].real(), v[q].real())) ++q;
            std::stable_sort(v.begin() + static_cast<long>(p), v.begin() + static_cast<long>(q),
                             [](const Complex& a, const Complex& b) { return a.imag() > b.imag(); });
            p = q;
        }
        i = j;
    }
}

double hermitian_spectral_norm(const ComplexMatrix& h) {
    const std::vector<double> ev = hermitian_eigenvalues(h);
    if (ev.empty()) return 0.0;
    return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

} // namespace harnack
