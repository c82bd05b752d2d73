#pragma once

#include <qes/common.hpp>
#include <qes/errors.hpp>
#include <qes/params.hpp>
#include <qes/polynomial.hpp>

#include <array>
#include <vector>

namespace qes {

/// Matrix-element coefficients of the tridiagonal form of the three-term
/// recurrence: gamma_m = 2m(2L+2m+1), mu_m = 4 m q A^2, beta_m = 4m(B+4j-m+1).
/// Requires 0 <= m <= 2j.
std::array<double, 3> recurrence_coefficients(const PoschlTellerParams& p, int m);

/// Monic energy polynomials P_0..P_upto in lambda for the Poschl-Teller family.
///
/// The raw three-term recurrence with P_0 = 1 leaves the normalization and one
/// sign implicit; the form actually generated here was re-derived from the
/// series expansion of the underlying hypergeometric-type ODE and is monic by
/// construction:
///
///   P_{m+1} = (lambda - m(B+4j-m+1)) P_m - (m(2L+2m+1)(2j-m+1) qA^2 / 2) P_{m-1}
///
/// This reproduces the closed forms P_1 = lambda and
/// P_2 = lambda^2 - (B+4j) lambda - j(2L+3) qA^2, and is consistent with the
/// tridiagonal matrix route (det(4 lambda I - T) = 4^n P_n). See
/// docs/polynomials.md for the derivation and low-order tables.
std::vector<EnergyPolynomial> generate_pt_polynomials(const PoschlTellerParams& p,
                                                      int upto,
                                                      Precision prec = Precision::Double);

/// Monic energy polynomials P_0..P_upto in epsilon for the sextic oscillator:
///   P_{m+1} = (epsilon - b m) P_m - (m(2L+2m+1)(2j-m+1) qa^2 / 2) P_{m-1}
std::vector<EnergyPolynomial> generate_sextic_polynomials(const SexticParams& p,
                                                          int upto,
                                                          Precision prec = Precision::Double);

/// Monic energy polynomials P_0..P_upto in epsilon for the PT-symmetric
/// anharmonic oscillator. The underlying four-term recurrence has imaginary
/// coefficients, but P_m = i^m R_m with R_m real, so the monic output is real
/// for every m (the i factors cancel in the normalization):
///
///   2(2j-m) qa^2 R_{m+1} = (eps - 2b(m-j)) R_m - 2 m ell R_{m-1} - m(m-1) R_{m-2}
///
/// The coefficient of R_{2j+1} vanishes at m = 2j, so the critical polynomial
/// P_{2j+1} is defined by the left-over closing relation at that step. Its
/// roots coincide with the quantization condition obtained independently by
/// truncating the eigenfunction series.
std::vector<EnergyPolynomial> generate_ptanh_polynomials(const PTAnharmonicParams& p,
                                                         int upto,
                                                         Precision prec = Precision::Double);

namespace detail {

// Templated cores. Coefficient lists ascending; monic by construction.
template <class Real>
std::vector<std::vector<Real>> pt_polynomial_core(Real L, Real B, Real qA2, int twoj,
                                                  int upto) {
    std::vector<std::vector<Real>> P;
    P.reserve(static_cast<size_t>(upto) + 1);
    P.push_back({Real(1)});
    for (int m = 0; m < upto; ++m) {
        const Real alpha_m = Real(m) * (B + Real(2 * twoj) - Real(m) + Real(1));
        const Real beta_m = Real(m) * (Real(2) * L + Real(2 * m + 1)) *
                            Real(twoj - m + 1) * qA2 / Real(2);
        std::vector<Real> next(static_cast<size_t>(m) + 2, Real(0));
        const auto& cur = P.back();
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= alpha_m * cur[i];
        }
        if (m >= 1) {
            const auto& prev = P[static_cast<size_t>(m) - 1];
            for (size_t i = 0; i < prev.size(); ++i) next[i] -= beta_m * prev[i];
        }
        P.push_back(std::move(next));
    }
    return P;
}

template <class Real>
std::vector<std::vector<Real>> sextic_polynomial_core(Real L, Real b, Real qa2,
                                                      int twoj, int upto) {
    std::vector<std::vector<Real>> P;
    P.reserve(static_cast<size_t>(upto) + 1);
    P.push_back({Real(1)});
    for (int m = 0; m < upto; ++m) {
        const Real alpha_m = b * Real(m);
        const Real beta_m = Real(m) * (Real(2) * L + Real(2 * m + 1)) *
                            Real(twoj - m + 1) * qa2 / Real(2);
        std::vector<Real> next(static_cast<size_t>(m) + 2, Real(0));
        const auto& cur = P.back();
        for (size_t i = 0; i < cur.size(); ++i) {
            next[i + 1] += cur[i];
            next[i] -= alpha_m * cur[i];
        }
        if (m >= 1) {
            const auto& prev = P[static_cast<size_t>(m) - 1];
            for (size_t i = 0; i < prev.size(); ++i) next[i] -= beta_m * prev[i];
        }
        P.push_back(std::move(next));
    }
    return P;
}

// Real-ized four-term chain R_m plus the closing relation for the critical
// member. Intermediate R_m are rescaled to monic on output.
template <class Real>
std::vector<std::vector<Real>> ptanh_polynomial_core(Real b, Real ell, Real qa2,
                                                     int twoj, int upto) {
    const Real j = Real(twoj) / Real(2);
    std::vector<std::vector<Real>> R;
    R.reserve(static_cast<size_t>(upto) + 1);
    R.push_back({Real(1)});
    auto term = [&](int m) {
        // (eps - 2b(m-j)) R_m - 2 m ell R_{m-1} - m(m-1) R_{m-2}
        std::vector<Real> out(static_cast<size_t>(m) + 2, Real(0));
        const auto& cur = R[static_cast<size_t>(m)];
        const Real shift = Real(2) * b * (Real(m) - j);
        for (size_t i = 0; i < cur.size(); ++i) {
            out[i + 1] += cur[i];
            out[i] -= shift * cur[i];
        }
        if (m >= 1) {
            const auto& p1 = R[static_cast<size_t>(m) - 1];
            const Real c1 = Real(2 * m) * ell;
            for (size_t i = 0; i < p1.size(); ++i) out[i] -= c1 * p1[i];
        }
        if (m >= 2) {
            const auto& p2 = R[static_cast<size_t>(m) - 2];
            const Real c2 = Real(m) * Real(m - 1);
            for (size_t i = 0; i < p2.size(); ++i) out[i] -= c2 * p2[i];
        }
        return out;
    };
    for (int m = 0; m < upto && m < twoj; ++m) {
        auto next = term(m);
        const Real denom = Real(2) * Real(twoj - m) * qa2;
        for (auto& c : next) c /= denom;
        R.push_back(std::move(next));
    }
    if (upto == twoj + 1) R.push_back(term(twoj)); // closing relation; critical member
    // monic rescale
    for (auto& poly : R) {
        const Real lead = poly.back();
        if (lead != Real(0) && lead != Real(1))
            for (auto& c : poly) c /= lead;
    }
    return R;
}

} // namespace detail

} // namespace qes
