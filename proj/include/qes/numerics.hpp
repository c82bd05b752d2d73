#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

namespace qes::num {

/// Eigenvalues of the companion matrix of a monic polynomial (ascending
/// coefficients, leading 1 implied by coeffs.back()==1 or appended).
/// Used as root seeds; callers polish with newton_polish.
std::vector<std::complex<double>> companion_roots(const std::vector<double>& monic_coeffs);

/// A few Newton steps on a polynomial with coefficients in Real arithmetic.
template <class Real>
Real newton_polish(const std::vector<Real>& coeffs, Real x0, int iters = 6) {
    using std::abs;
    Real x = x0;
    for (int k = 0; k < iters; ++k) {
        Real p = 0, dp = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            dp = dp * x + p;
            p = p * x + *it;
        }
        if (dp == Real(0)) break;
        Real step = p / dp;
        x -= step;
        if (abs(step) <= abs(x) * std::numeric_limits<Real>::epsilon() * 4) break;
    }
    return x;
}

inline std::complex<double> newton_polish_complex(const std::vector<double>& coeffs,
                                                  std::complex<double> x0,
                                                  int iters = 6) {
    std::complex<double> x = x0;
    for (int k = 0; k < iters; ++k) {
        std::complex<double> p = 0, dp = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            dp = dp * x + p;
            p = p * x + *it;
        }
        if (std::abs(dp) == 0.0) break;
        x -= p / dp;
    }
    return x;
}

/// Sturm count for a symmetric tridiagonal matrix: number of eigenvalues < x.
template <class Real>
int sturm_count(const std::vector<Real>& d, const std::vector<Real>& e, const Real& x) {
    using std::abs;
    const size_t n = d.size();
    int count = 0;
    Real q = d[0] - x;
    if (q < Real(0)) ++count;
    for (size_t i = 1; i < n; ++i) {
        Real denom = q;
        if (denom == Real(0))
            denom = std::numeric_limits<Real>::epsilon() * (abs(e[i - 1]) + Real(1));
        q = d[i] - x - e[i - 1] * e[i - 1] / denom;
        if (q < Real(0)) ++count;
    }
    return count;
}

/// Lowest k eigenvalues of a symmetric tridiagonal matrix by Sturm bisection.
/// d: diagonal (size n); e: off-diagonal (size n-1). Ascending output.
template <class Real>
std::vector<Real> tridiag_lowest_eigenvalues(const std::vector<Real>& d,
                                             const std::vector<Real>& e, int k,
                                             Real rel_tol) {
    using std::abs;
    const size_t n = d.size();
    if (k <= 0 || n == 0) return {};
    k = std::min<int>(k, static_cast<int>(n));
    // Gershgorin bounds
    Real lo = d[0], hi = d[0];
    for (size_t i = 0; i < n; ++i) {
        Real r = Real(0);
        if (i > 0) r += abs(e[i - 1]);
        if (i + 1 < n) r += abs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const Real span = hi - lo + Real(1);
    std::vector<Real> out;
    out.reserve(static_cast<size_t>(k));
    for (int m = 1; m <= k; ++m) {
        Real a = lo, b = hi;
        while (b - a > rel_tol * (abs(a) + abs(b) + Real(1)) && b - a > span * std::numeric_limits<Real>::epsilon()) {
            Real mid = (a + b) / Real(2);
            if (sturm_count(d, e, mid) >= m)
                b = mid;
            else
                a = mid;
        }
        out.push_back((a + b) / Real(2));
    }
    return out;
}

/// Eigenvector of a symmetric tridiagonal matrix by inverse iteration with a
/// slightly shifted eigenvalue; tridiagonal elimination with partial pivoting.
std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e, double lambda);

/// Composite Simpson rule over equally spaced samples (n odd preferred; falls
/// back to trapezoid on the last panel when even).
inline double simpson(const std::vector<double>& f, double h) {
    const size_t n = f.size();
    if (n < 2) return 0.0;
    double s = 0.0;
    size_t last = (n % 2 == 1) ? n - 1 : n - 2;
    for (size_t i = 0; i + 2 <= last; i += 2)
        s += f[i] + 4.0 * f[i + 1] + f[i + 2];
    s *= h / 3.0;
    if (n % 2 == 0) s += 0.5 * h * (f[n - 2] + f[n - 1]);
    return s;
}

} // namespace qes::num
