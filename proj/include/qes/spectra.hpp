#pragma once

#include <qes/bd_polynomials.hpp>
#include <qes/common.hpp>
#include <qes/params.hpp>
#include <qes/potentials.hpp>

#include <complex>
#include <vector>

namespace qes {

enum class SpectrumMethod { PolynomialRoots, Tridiagonal };

/// Roots of the critical polynomial P_{2j+1} with their mapped physical
/// energies. lambda_roots is sorted ascending; energies follow the same order.
/// Roots whose imaginary part exceeds 1e-8 (1+|root|) are quarantined into
/// complex_roots and excluded from lambda_roots.
struct SpectralSolution {
    FamilyTag family = FamilyTag::PoschlTeller;
    std::vector<double> lambda_roots;
    std::vector<std::complex<double>> energies;
    SpectrumMethod method = SpectrumMethod::PolynomialRoots;
    std::vector<double> residuals; // |P(root)| / (1+|root|^deg), or matrix residual
    std::vector<std::complex<double>> complex_roots; // diagnostics only
};

/// Physical energy of the Poschl-Teller family for a spectral value lambda:
///   E = [-(L-A+2m+1)^2 + (L-A+B+4j+2)(2L+4m+3) + 4 lambda] alpha^2
/// Affine in lambda with slope 4 alpha^2. The level index m defaults to 0,
/// which is the convention under which this expression coincides with the
/// energy obtained directly from the Schroedinger reduction for every lambda;
/// the pairing was fixed by minimizing the equation residual over small m
/// (see tests). For q = 0 with lambda_m = m(A-L-1-m) this reduces to the
/// exactly solvable spectrum E_m = -alpha^2 (L-A+2m+1)^2.
double energy_poschl_teller(double lambda, const PoschlTellerParams& p, int m = 0);

/// Energy map of the half-coordinate (generalized) family, also used verbatim
/// for the PT-symmetric Scarf family: E' = E/4 + m(B+4j-m+1) alpha^2. The
/// resolved pairing is m = 0 (E' = E/4), matching the coordinate-map Jacobian.
double energy_generalized(double E_pt, const PoschlTellerParams& p, int m = 0);

/// E = epsilon + b(1+2j) + ell^2
double energy_pt_anharmonic(double epsilon, const PTAnharmonicParams& p);

/// E = 4 epsilon + (2L+3) b
double energy_sextic(double epsilon, const SexticParams& p);

/// Spectrum as roots of P_{2j+1}: companion-matrix eigenvalues, one Newton
/// polish per root, residual certification.
SpectralSolution lambda_spectrum_roots(const PoschlTellerParams& p,
                                       Precision prec = Precision::Double);
SpectralSolution lambda_spectrum_roots(const SexticParams& p,
                                       Precision prec = Precision::Double);
SpectralSolution lambda_spectrum_roots(const PTAnharmonicParams& p,
                                       Precision prec = Precision::Double);

/// Spectrum as eigenvalues/4 of the (2j+1)x(2j+1) tridiagonal matrix with
/// diagonal beta_m, superdiagonal mu_{2j-m}, subdiagonal gamma_{m+1}. Kept
/// independent of the polynomial route as a cross-check.
SpectralSolution lambda_spectrum_tridiagonal(const PoschlTellerParams& p,
                                             Precision prec = Precision::Double);

/// Family-level frontend: computes the spectral roots of the family's
/// recurrence and maps them to the family's physical energies (GeneralizedPT
/// and ScarfPT share the Poschl-Teller roots with energies E/4).
SpectralSolution spectrum_for_family(const PotentialFamily& fam,
                                     SpectrumMethod method = SpectrumMethod::PolynomialRoots,
                                     Precision prec = Precision::Double);

} // namespace qes
