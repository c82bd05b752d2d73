#pragma once

#include <qes/grid.hpp>
#include <qes/params.hpp>
#include <qes/potentials.hpp>

#include <complex>
#include <vector>

namespace qes {

/// A closed-form eigenfunction: family, spectral value, and the polynomial
/// factor coefficients. For the real-recurrence families rj_coefficients holds
/// a_0..a_{2j} of the factor R_j(u) = sum a_m u^m with the canonical scale
/// a_0 = 1; for the quartic PT family series_coefficients holds the complex
/// c_0..c_{2j} of the all-powers factor sum c_n x^n.
struct EigenfunctionSpec {
    PotentialFamily family;
    double lambda = 0.0; // spectral value (lambda or epsilon)
    int level_index = 0; // energy-map index m; resolved convention is 0
    std::vector<double> rj_coefficients;
    std::vector<std::complex<double>> series_coefficients;
};

/// Coefficients a_0..a_{2j} of the polynomial factor, canonical scale a_0 = 1.
/// From the closed form they reduce to
///   a_m =  4^m  G_m P_m(lambda)   (Poschl-Teller substitution u = -sinh^2)
///   a_m = (-4)^m G_m P_m(epsilon) (sextic substitution u = x^2)
/// with G_m = Gamma(L+m+1) Gamma(2L+2) / (Gamma(m+1) Gamma(L+1) Gamma(2L+2m+2))
/// and P_m the monic polynomials; the (2j)!/(2j-m)! and (qA^2)^m factors of the
/// unnormalized expression cancel against the monic rescaling. Off-shell lambda
/// (not a root of P_{2j+1}) is allowed and useful for testing. Throws
/// GammaPoleError when a Gamma argument hits a non-positive integer.
std::vector<double> rj_coefficients(const PoschlTellerParams& p, double lambda);
std::vector<double> rj_coefficients(const SexticParams& p, double epsilon);

/// Complex series coefficients c_0..c_{2j} of the quartic PT eigenfunction,
/// obtained by truncating the series solution at the given epsilon (a root of
/// the critical polynomial up to roundoff; off-shell values leave a truncation
/// defect that is reported through the residual checker, not here).
std::vector<std::complex<double>> ptanh_series_coefficients(const PTAnharmonicParams& p,
                                                            double epsilon);

/// Builds the eigenfunction record for a family at a spectral value.
EigenfunctionSpec make_eigenfunction(const PotentialFamily& fam, double spectral_value,
                                     int level_index = 0);

/// psi(x) = prefactor(x) * R_j(u(x)) with the family's substitution
///   u = -sinh^2(alpha x)                (Poschl-Teller)
///   u = -sinh^2(alpha x / 2)            (generalized, half coordinate)
///   u = -sinh^2(alpha x/2 + i pi/4)     (Scarf, complex)
///   u = x^2                             (sextic)
/// and for the quartic PT family the all-powers series with the phase factor
/// exp(-i ell x - b x^2/2 - i qa^2 x^3/3).
std::complex<double> eval_wavefunction(const EigenfunctionSpec& spec, double x);

/// log psi (principal branch): overflow-safe representation, log-magnitude in
/// the real part and phase in the imaginary part.
std::complex<double> eval_wavefunction_log(const EigenfunctionSpec& spec, double x);

/// Squared L2 norm N = integral of |psi|^2 over the grid (Simpson). Scaling
/// psi by 1/sqrt(N) normalizes it. Requires |psi| at the grid ends below
/// 1e-8 of its maximum, else NonNormalizableError.
double normalize_numerically(const EigenfunctionSpec& spec, const GridConfig& grid);

} // namespace qes
