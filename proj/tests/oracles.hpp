// Test-only closed forms and independent oracles. The polynomial closed forms
// were derived symbolically from the series expansions of the underlying ODEs
// (see docs/polynomials.md) and are frozen here, independent of the recurrence
// implementation they check.
#pragma once

#include <qes/params.hpp>

#include <cmath>
#include <random>
#include <vector>

namespace oracles {

inline bool close_rel(double a, double b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// ---- Poschl-Teller closed forms (monic, spectral variable lam) -------------

inline double pt_p1(double lam) { return lam; }

inline double pt_p2(double lam, double L, double B, double j, double qA2) {
    return lam * lam - (B + 4 * j) * lam - j * (2 * L + 3) * qA2;
}

// re-derived third member (the printed table entry is corrupted)
inline double pt_p3(double lam, double L, double B, double j, double qA2) {
    const double bj = B + 4 * j;
    return lam * lam * lam - (3 * B + 12 * j - 2) * lam * lam +
           (2 * bj * (bj - 1) - (j * (2 * L + 3) + (2 * L + 5) * (2 * j - 1)) * qA2) * lam +
           2 * j * (2 * L + 3) * (bj - 1) * qA2;
}

// ---- sextic closed forms (monic, spectral variable eps) --------------------

inline double sx_p1(double eps) { return eps; }

inline double sx_p2(double eps, double L, double b, double j, double qa2) {
    return eps * eps - b * eps - j * (2 * L + 3) * qa2;
}

inline double sx_p3(double eps, double L, double b, double j, double qa2) {
    return eps * eps * eps - 3 * b * eps * eps +
           (2 * b * b - (j * (2 * L + 3) + (2 * L + 5) * (2 * j - 1)) * qa2) * eps +
           2 * b * j * (2 * L + 3) * qa2;
}

inline double sx_p4(double eps, double L, double b, double j, double qa2) {
    const double e2 = 11 * b * b + (-12 * L * j + 8 * L - 34 * j + 26) * qa2;
    const double e1 = -6 * b * b * b + (28 * L * j - 12 * L + 66 * j - 36) * b * qa2;
    const double e0 = -6 * j * (2 * L + 3) * b * b * qa2 +
                      3 * j * (j - 1) * (2 * L + 3) * (2 * L + 7) * qa2 * qa2;
    return (((eps - 6 * b) * eps + e2) * eps + e1) * eps + e0;
}

// ---- quartic PT criticals (known low-order closed forms, verified against the
// ---- independent series-truncation quantization) ---------------------------

inline double qt_p1(double eps) { return eps; }

inline double qt_p2(double eps, double b, double qa2, double ell) {
    return eps * eps - b * b - 4 * qa2 * ell;
}

inline double qt_p3(double eps, double b, double qa2, double ell) {
    return eps * eps * eps - 4 * (b * b + 4 * qa2 * ell) * eps - 16 * qa2 * qa2;
}

inline double qt_p4(double eps, double b, double qa2, double ell) {
    const double s = b * b + 4 * qa2 * ell;
    return eps * eps * eps * eps - 10 * s * eps * eps - 96 * qa2 * qa2 * eps + 9 * s * s;
}

inline double qt_p5(double eps, double b, double qa2, double ell) {
    const double s = b * b + 4 * qa2 * ell;
    return ((eps * eps - 20 * s) * eps * eps - 336 * qa2 * qa2 * eps + 64 * s * s) * eps +
           768 * qa2 * qa2 * s;
}

// ---- independent series-coefficient oracles ---------------------------------
// Direct forward solution of the series relations of the hypergeometric-type
// ODEs, a_0 = 1; no monic polynomials involved.

inline std::vector<double> pt_series_coefficients(const qes::PoschlTellerParams& p,
                                                  double lam) {
    std::vector<double> a(static_cast<size_t>(p.twoj()) + 1, 0.0);
    a[0] = 1.0;
    for (int m = 0; m < p.twoj(); ++m) {
        const double rhs = (lam + m * (m - 1.0) - m * (p.B() + 2.0 * p.twoj())) * a[m] -
                           (m >= 1 ? p.qA2() * (p.twoj() - m + 1.0) * a[m - 1] : 0.0);
        a[m + 1] = rhs / ((m + 1.0) * (m + p.L() + 1.5));
    }
    return a;
}

inline std::vector<double> sextic_series_coefficients(const qes::SexticParams& p,
                                                      double eps) {
    std::vector<double> a(static_cast<size_t>(p.twoj) + 1, 0.0);
    a[0] = 1.0;
    for (int m = 0; m < p.twoj; ++m) {
        const double rhs = -(eps - p.b * m) * a[m] -
                           (m >= 1 ? p.qa2() * (p.twoj - m + 1.0) * a[m - 1] : 0.0);
        a[m + 1] = rhs / ((m + 1.0) * (m + p.L + 1.5));
    }
    return a;
}

// ---- random parameter draws -------------------------------------------------

struct Draw {
    std::mt19937_64 rng;
    explicit Draw(uint64_t seed) : rng(seed) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }
    int twoj_choice() { return 1 + static_cast<int>(rng() % 4); } // j in {1/2,..,2}
    qes::PoschlTellerParams pt() {
        return qes::PoschlTellerParams::make(uniform(-0.4, 5.0), uniform(0.5, 5.0),
                                             uniform(0.1, 2.0), uniform(0.5, 2.0),
                                             twoj_choice());
    }
    qes::SexticParams sextic() {
        return qes::SexticParams::make(uniform(-0.4, 5.0), uniform(0.5, 3.0), 1.0,
                                       uniform(0.1, 2.0), twoj_choice());
    }
};

} // namespace oracles
