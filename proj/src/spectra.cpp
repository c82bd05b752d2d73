#include <qes/numerics.hpp>
#include <qes/spectra.hpp>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>

namespace qes {

using ext_float = boost::multiprecision::cpp_bin_float_50;
using cplx = std::complex<double>;

namespace num {

std::vector<std::complex<double>> companion_roots(const std::vector<double>& coeffs) {
    const int n = static_cast<int>(coeffs.size()) - 1;
    if (n <= 0) return {};
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) C(i + 1, i) = 1.0;
    for (int i = 0; i < n; ++i) C(i, n - 1) = -coeffs[static_cast<size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(C, /*computeEigenvectors=*/false);
    std::vector<std::complex<double>> roots(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) roots[static_cast<size_t>(i)] = es.eigenvalues()[i];
    return roots;
}

std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e, double lambda) {
    const size_t n = d.size();
    std::vector<double> v(n, 1.0);
    // two rounds of inverse iteration on (T - (lambda+delta) I)
    const double delta = 1e-10 * (std::abs(lambda) + 1.0);
    for (int iter = 0; iter < 2; ++iter) {
        // tridiagonal elimination with partial pivoting
        std::vector<double> a(n), bdiag(n), c(n, 0.0), c2(n, 0.0);
        for (size_t i = 0; i < n; ++i) {
            bdiag[i] = d[i] - lambda - delta;
            a[i] = (i > 0) ? e[i - 1] : 0.0;
            c[i] = (i + 1 < n) ? e[i] : 0.0;
        }
        std::vector<double> rhs = v;
        for (size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(a[i + 1]) > std::abs(bdiag[i])) {
                std::swap(bdiag[i], a[i + 1]);
                std::swap(c[i], bdiag[i + 1]);
                std::swap(c2[i], c[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (bdiag[i] == 0.0) bdiag[i] = 1e-300;
            const double m = a[i + 1] / bdiag[i];
            bdiag[i + 1] -= m * c[i];
            c[i + 1] -= m * c2[i];
            rhs[i + 1] -= m * rhs[i];
        }
        if (bdiag[n - 1] == 0.0) bdiag[n - 1] = 1e-300;
        v[n - 1] = rhs[n - 1] / bdiag[n - 1];
        if (n >= 2) v[n - 2] = (rhs[n - 2] - c[n - 2] * v[n - 1]) / bdiag[n - 2];
        for (int i = static_cast<int>(n) - 3; i >= 0; --i) {
            const size_t ii = static_cast<size_t>(i);
            v[ii] = (rhs[ii] - c[ii] * v[ii + 1] - c2[ii] * v[ii + 2]) / bdiag[ii];
        }
        double norm = 0.0;
        for (double x : v) norm += x * x;
        norm = std::sqrt(norm);
        for (double& x : v) x /= norm;
    }
    return v;
}

} // namespace num

double energy_poschl_teller(double lambda, const PoschlTellerParams& p, int m) {
    if (m < 0) throw RangeError("level index m must be non-negative");
    const double a2 = p.alpha() * p.alpha();
    const double LA = p.L() - p.A();
    const double t = LA + 2.0 * m + 1.0;
    return (-t * t + (LA + p.B() + 2.0 * p.twoj() + 2.0) * (2.0 * p.L() + 4.0 * m + 3.0) +
            4.0 * lambda) * a2;
}

double energy_generalized(double E_pt, const PoschlTellerParams& p, int m) {
    if (m < 0) throw RangeError("level index m must be non-negative");
    const double a2 = p.alpha() * p.alpha();
    return 0.25 * E_pt + m * (p.B() + 2.0 * p.twoj() - m + 1.0) * a2;
}

double energy_pt_anharmonic(double epsilon, const PTAnharmonicParams& p) {
    return epsilon + p.b * (1.0 + p.twoj) + p.ell * p.ell;
}

double energy_sextic(double epsilon, const SexticParams& p) {
    return 4.0 * epsilon + (2.0 * p.L + 3.0) * p.b;
}

namespace {

template <class Real>
double certification_residual(const std::vector<Real>& coeffs, double root) {
    using std::abs;
    Real acc(0), x(root);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    const int deg = static_cast<int>(coeffs.size()) - 1;
    return static_cast<double>(abs(acc)) / (1.0 + std::pow(std::abs(root), deg));
}

/// Extract real roots of a monic polynomial: companion seeds, Newton polish at
/// the requested precision, complex-root quarantine, ascending sort.
struct RootExtraction {
    std::vector<double> real_roots;
    std::vector<double> residuals;
    std::vector<cplx> complex_roots;
};

// coeffs: double rounding of the critical polynomial (companion seeds and
// certification); ext_coeffs: the same polynomial at extended precision when
// the caller asked for it (Newton polishing then runs at 50 digits).
RootExtraction extract_roots(const std::vector<double>& coeffs,
                             const std::vector<ext_float>* ext_coeffs) {
    RootExtraction out;
    auto seeds = num::companion_roots(coeffs);
    for (auto z : seeds) {
        z = num::newton_polish_complex(coeffs, z, 4);
        if (std::abs(z.imag()) > 1e-8 * (1.0 + std::abs(z))) {
            out.complex_roots.push_back(z);
            continue;
        }
        double r = z.real();
        r = ext_coeffs ? static_cast<double>(
                             num::newton_polish<ext_float>(*ext_coeffs, ext_float(r), 8))
                       : num::newton_polish<double>(coeffs, r, 2);
        out.real_roots.push_back(r);
    }
    std::sort(out.real_roots.begin(), out.real_roots.end());
    // certification pairs the reported (double) root with the double
    // coefficients; at high degree the metric is conditioning-limited either way
    for (double r : out.real_roots) out.residuals.push_back(certification_residual(coeffs, r));
    std::sort(out.complex_roots.begin(), out.complex_roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

} // namespace

SpectralSolution lambda_spectrum_roots(const PoschlTellerParams& p, Precision prec) {
    SpectralSolution sol;
    sol.family = FamilyTag::PoschlTeller;
    sol.method = SpectrumMethod::PolynomialRoots;
    const auto polys = generate_pt_polynomials(p, p.twoj() + 1, prec);
    std::vector<ext_float> ext;
    if (prec == Precision::Extended)
        ext = detail::pt_polynomial_core<ext_float>(ext_float(p.L()), ext_float(p.B()),
                                                    ext_float(p.qA2()), p.twoj(),
                                                    p.twoj() + 1)
                  .back();
    auto ex = extract_roots(polys.back().coefficients,
                            prec == Precision::Extended ? &ext : nullptr);
    sol.lambda_roots = std::move(ex.real_roots);
    sol.residuals = std::move(ex.residuals);
    sol.complex_roots = std::move(ex.complex_roots);
    for (double r : sol.lambda_roots)
        sol.energies.push_back(energy_poschl_teller(r, p));
    return sol;
}

SpectralSolution lambda_spectrum_roots(const SexticParams& p, Precision prec) {
    SpectralSolution sol;
    sol.family = FamilyTag::Sextic;
    sol.method = SpectrumMethod::PolynomialRoots;
    const auto polys = generate_sextic_polynomials(p, p.twoj + 1, prec);
    std::vector<ext_float> ext;
    if (prec == Precision::Extended)
        ext = detail::sextic_polynomial_core<ext_float>(ext_float(p.L), ext_float(p.b),
                                                        ext_float(p.qa2()), p.twoj,
                                                        p.twoj + 1)
                  .back();
    auto ex = extract_roots(polys.back().coefficients,
                            prec == Precision::Extended ? &ext : nullptr);
    sol.lambda_roots = std::move(ex.real_roots);
    sol.residuals = std::move(ex.residuals);
    sol.complex_roots = std::move(ex.complex_roots);
    for (double r : sol.lambda_roots) sol.energies.push_back(energy_sextic(r, p));
    return sol;
}

SpectralSolution lambda_spectrum_roots(const PTAnharmonicParams& p, Precision prec) {
    SpectralSolution sol;
    sol.family = FamilyTag::PTAnharmonic;
    sol.method = SpectrumMethod::PolynomialRoots;
    const auto polys = generate_ptanh_polynomials(p, p.twoj + 1, prec);
    std::vector<ext_float> ext;
    if (prec == Precision::Extended)
        ext = detail::ptanh_polynomial_core<ext_float>(ext_float(p.b), ext_float(p.ell),
                                                       ext_float(p.qa2()), p.twoj,
                                                       p.twoj + 1)
                  .back();
    auto ex = extract_roots(polys.back().coefficients,
                            prec == Precision::Extended ? &ext : nullptr);
    sol.lambda_roots = std::move(ex.real_roots);
    sol.residuals = std::move(ex.residuals);
    sol.complex_roots = std::move(ex.complex_roots);
    for (double r : sol.lambda_roots)
        sol.energies.push_back(energy_pt_anharmonic(r, p));
    return sol;
}

namespace {

template <class Real>
std::vector<Real> tridiagonal_lambdas(const PoschlTellerParams& p) {
    using std::sqrt;
    const int n = p.twoj() + 1;
    std::vector<Real> beta(static_cast<size_t>(n)), off;
    const Real L(p.L()), B(p.B()), qA2(p.qA2());
    for (int m = 0; m < n; ++m)
        beta[static_cast<size_t>(m)] =
            Real(4 * m) * (B + Real(2 * p.twoj()) - Real(m) + Real(1));
    // symmetrized off-diagonal: sqrt(gamma_{m+1} mu_{2j-m})
    off.reserve(static_cast<size_t>(n) - 1);
    for (int m = 0; m + 1 < n; ++m) {
        const Real gamma = Real(2 * (m + 1)) * (Real(2) * L + Real(2 * m + 3));
        const Real mu = Real(4 * (p.twoj() - m)) * qA2;
        const Real prod = gamma * mu;
        if (prod < Real(0))
            throw NonConvergedError("tridiagonal symmetrization needs q >= 0");
        off.push_back(sqrt(prod));
    }
    auto evs = num::tridiag_lowest_eigenvalues<Real>(
        beta, off, n, std::numeric_limits<Real>::epsilon() * Real(64));
    for (auto& e : evs) e /= Real(4);
    return evs;
}

} // namespace

SpectralSolution lambda_spectrum_tridiagonal(const PoschlTellerParams& p, Precision prec) {
    SpectralSolution sol;
    sol.family = FamilyTag::PoschlTeller;
    sol.method = SpectrumMethod::Tridiagonal;
    if (p.qA2() == 0.0 && p.twoj() > 0)
        throw DegenerateParameterError("qA^2 = 0: tridiagonal spectrum undefined");
    if (prec == Precision::Extended) {
        for (auto& r : tridiagonal_lambdas<ext_float>(p))
            sol.lambda_roots.push_back(static_cast<double>(r));
    } else {
        sol.lambda_roots = tridiagonal_lambdas<double>(p);
    }
    // matrix residual: |P_{2j+1}(root)| scaled, via the polynomial as the
    // characteristic form (diagnostic only)
    const auto polys = generate_pt_polynomials(p, p.twoj() + 1, prec);
    for (double r : sol.lambda_roots) {
        sol.residuals.push_back(certification_residual(polys.back().coefficients, r));
        sol.energies.push_back(energy_poschl_teller(r, p));
    }
    return sol;
}

SpectralSolution spectrum_for_family(const PotentialFamily& fam, SpectrumMethod method,
                                     Precision prec) {
    switch (fam.tag) {
        case FamilyTag::PoschlTeller:
            return method == SpectrumMethod::Tridiagonal
                       ? lambda_spectrum_tridiagonal(fam.pt(), prec)
                       : lambda_spectrum_roots(fam.pt(), prec);
        case FamilyTag::GeneralizedPT:
        case FamilyTag::ScarfPT: {
            SpectralSolution sol = method == SpectrumMethod::Tridiagonal
                                       ? lambda_spectrum_tridiagonal(fam.pt(), prec)
                                       : lambda_spectrum_roots(fam.pt(), prec);
            sol.family = fam.tag;
            for (auto& E : sol.energies)
                E = energy_generalized(E.real(), fam.pt());
            return sol;
        }
        case FamilyTag::Sextic:
            if (method == SpectrumMethod::Tridiagonal)
                throw DomainError("tridiagonal route is defined for the Poschl-Teller recurrence");
            return lambda_spectrum_roots(fam.sextic(), prec);
        case FamilyTag::PTAnharmonic:
            if (method == SpectrumMethod::Tridiagonal)
                throw DomainError("tridiagonal route is defined for the Poschl-Teller recurrence");
            return lambda_spectrum_roots(fam.ptanh(), prec);
    }
    throw DomainError("unknown family tag");
}

} // namespace qes
