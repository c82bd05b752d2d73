#include <qes/bd_polynomials.hpp>
#include <qes/numerics.hpp>
#include <qes/wavefunctions.hpp>

#include <cmath>

namespace qes {

using cplx = std::complex<double>;

namespace {

void check_gamma_args(double L, int twoj) {
    (void)twoj;
    // Gamma(L+1), Gamma(2L+2) must stay off the poles at non-positive integers.
    auto at_pole = [](double z) {
        if (z > 0.0) return false;
        return std::abs(z - std::round(z)) < 1e-12;
    };
    if (at_pole(L + 1.0) || at_pole(2.0 * L + 2.0))
        throw GammaPoleError("factorial of a negative integer in the coefficient formula");
    if (L <= -1.0)
        throw GammaPoleError("coefficient formula requires L > -1");
}

// G_m = Gamma(L+m+1) Gamma(2L+2) / (Gamma(m+1) Gamma(L+1) Gamma(2L+2m+2))
double gamma_ratio(double L, int m) {
    return std::exp(std::lgamma(L + m + 1.0) + std::lgamma(2.0 * L + 2.0) -
                    std::lgamma(m + 1.0) - std::lgamma(L + 1.0) -
                    std::lgamma(2.0 * L + 2.0 * m + 2.0));
}

std::vector<double> factor_coefficients(double L, int twoj, double sign4,
                                        const std::vector<EnergyPolynomial>& polys,
                                        double spectral) {
    check_gamma_args(L, twoj);
    std::vector<double> a(static_cast<size_t>(twoj) + 1);
    double pow4 = 1.0;
    for (int m = 0; m <= twoj; ++m) {
        a[static_cast<size_t>(m)] =
            pow4 * gamma_ratio(L, m) *
            eval_polynomial(polys[static_cast<size_t>(m)], spectral);
        pow4 *= sign4;
    }
    return a;
}

cplx horner(const std::vector<double>& a, cplx u) {
    cplx acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * u + *it;
    return acc;
}

cplx horner(const std::vector<cplx>& a, cplx u) {
    cplx acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) acc = acc * u + *it;
    return acc;
}

} // namespace

std::vector<double> rj_coefficients(const PoschlTellerParams& p, double lambda) {
    check_gamma_args(p.L(), p.twoj());
    if (p.qA2() == 0.0) {
        // the (4qA^2)^m factor annihilates every m >= 1 term; the exactly
        // solvable states are validated through the grid oracle instead
        std::vector<double> a(static_cast<size_t>(p.twoj()) + 1, 0.0);
        a[0] = 1.0;
        return a;
    }
    const auto polys = generate_pt_polynomials(p, p.twoj(), Precision::Double);
    return factor_coefficients(p.L(), p.twoj(), 4.0, polys, lambda);
}

std::vector<double> rj_coefficients(const SexticParams& p, double epsilon) {
    check_gamma_args(p.L, p.twoj);
    if (p.qa2() == 0.0) {
        std::vector<double> a(static_cast<size_t>(p.twoj) + 1, 0.0);
        a[0] = 1.0;
        return a;
    }
    const auto polys = generate_sextic_polynomials(p, p.twoj, Precision::Double);
    return factor_coefficients(p.L, p.twoj, -4.0, polys, epsilon);
}

std::vector<cplx> ptanh_series_coefficients(const PTAnharmonicParams& p, double epsilon) {
    const int twoj = p.twoj;
    const double j = 0.5 * twoj;
    const double qa2 = p.qa2();
    const cplx I(0.0, 1.0);
    // c_n = u_n + t * v_n, linear in the free odd seed t; recurrence
    // (n+2)(n+1) c_{n+2} = 2 i ell (n+1) c_{n+1} - (eps + 2b(j-n)) c_n
    //                      - 2 i qa2 (2j-n+1) c_{n-1}
    std::vector<cplx> u(static_cast<size_t>(twoj) + 3, 0.0);
    std::vector<cplx> v(static_cast<size_t>(twoj) + 3, 0.0);
    u[0] = 1.0;
    if (twoj + 3 >= 2) v[1] = 1.0;
    for (int n = 0; n + 2 <= twoj + 2; ++n) {
        const cplx f1 = 2.0 * I * p.ell * double(n + 1);
        const cplx f0 = -(epsilon + 2.0 * p.b * (j - n));
        const cplx fm = -2.0 * I * qa2 * double(twoj - n + 1);
        const double denom = double(n + 2) * double(n + 1);
        const cplx um1 = (n >= 1) ? u[static_cast<size_t>(n) - 1] : 0.0;
        const cplx vm1 = (n >= 1) ? v[static_cast<size_t>(n) - 1] : 0.0;
        u[static_cast<size_t>(n) + 2] =
            (f1 * u[static_cast<size_t>(n) + 1] + f0 * u[static_cast<size_t>(n)] + fm * um1) / denom;
        v[static_cast<size_t>(n) + 2] =
            (f1 * v[static_cast<size_t>(n) + 1] + f0 * v[static_cast<size_t>(n)] + fm * vm1) / denom;
    }
    // truncation: c_{2j+1} = c_{2j+2} = 0. The two chains seeded by (c0, c1)
    // make this a homogeneous 2x2 system; take the null vector of the
    // better-conditioned row (at a root the rows are proportional). Degenerate
    // eigenvectors with c0 = 0 are legitimate here, e.g. ell = 0 pairs.
    const cplx u1 = u[static_cast<size_t>(twoj) + 1], v1 = v[static_cast<size_t>(twoj) + 1];
    const cplx u2 = u[static_cast<size_t>(twoj) + 2], v2 = v[static_cast<size_t>(twoj) + 2];
    cplx s0, s1;
    if (std::abs(u1) + std::abs(v1) >= std::abs(u2) + std::abs(v2)) {
        s0 = v1;
        s1 = -u1;
    } else {
        s0 = v2;
        s1 = -u2;
    }
    if (std::abs(s0) == 0.0 && std::abs(s1) == 0.0)
        throw DegenerateParameterError("quartic series truncation is singular");
    std::vector<cplx> c(static_cast<size_t>(twoj) + 1);
    double peak = 0.0;
    for (int n = 0; n <= twoj; ++n) {
        c[static_cast<size_t>(n)] =
            s0 * u[static_cast<size_t>(n)] + s1 * v[static_cast<size_t>(n)];
        peak = std::max(peak, std::abs(c[static_cast<size_t>(n)]));
    }
    if (peak == 0.0)
        throw DegenerateParameterError("quartic series truncation is singular");
    // canonical scale: c0 = 1 whenever c0 participates, else peak magnitude 1
    const cplx head = c[0];
    if (std::abs(head) > 1e-10 * peak)
        for (auto& cc : c) cc /= head;
    else
        for (auto& cc : c) cc /= peak;
    return c;
}

EigenfunctionSpec make_eigenfunction(const PotentialFamily& fam, double spectral_value,
                                     int level_index) {
    EigenfunctionSpec spec;
    spec.family = fam;
    spec.lambda = spectral_value;
    spec.level_index = level_index;
    switch (fam.tag) {
        case FamilyTag::PoschlTeller:
        case FamilyTag::GeneralizedPT:
        case FamilyTag::ScarfPT:
            spec.rj_coefficients = rj_coefficients(fam.pt(), spectral_value);
            break;
        case FamilyTag::Sextic:
            spec.rj_coefficients = rj_coefficients(fam.sextic(), spectral_value);
            break;
        case FamilyTag::PTAnharmonic:
            spec.series_coefficients = ptanh_series_coefficients(fam.ptanh(), spectral_value);
            break;
    }
    return spec;
}

namespace {

// log of the prefactor (principal branch) plus the factor argument u(x)
struct Assembled {
    cplx log_prefactor;
    cplx u;
};

Assembled assemble(const EigenfunctionSpec& spec, double x) {
    const auto& fam = spec.family;
    switch (fam.tag) {
        case FamilyTag::PoschlTeller: {
            const auto& p = fam.pt();
            if (x <= 0.0) throw DomainError("eigenfunction lives on x > 0");
            const double u = p.alpha() * x;
            const double cexp = p.qA2() - p.B() - p.L() - 2.0 * p.twoj() - 2.0;
            const cplx lp = cexp * std::log(std::cosh(u)) +
                            (1.0 + p.L()) * std::log(std::sinh(u)) -
                            0.25 * p.qA2() * std::cosh(2.0 * u);
            const double sh = std::sinh(u);
            return {lp, cplx(-sh * sh, 0.0)};
        }
        case FamilyTag::GeneralizedPT: {
            const auto& p = fam.pt();
            if (x <= 0.0) throw DomainError("eigenfunction lives on x > 0");
            const double u = 0.5 * p.alpha() * x;
            const double cexp = p.qA2() - p.B() - p.L() - 2.0 * p.twoj() - 2.0;
            const cplx lp = cexp * std::log(std::cosh(u)) +
                            (1.0 + p.L()) * std::log(std::sinh(u)) -
                            0.25 * p.qA2() * std::cosh(2.0 * u);
            const double sh = std::sinh(u);
            return {lp, cplx(-sh * sh, 0.0)};
        }
        case FamilyTag::ScarfPT: {
            const auto& p = fam.pt();
            const cplx w(0.5 * p.alpha() * x, 0.25 * M_PI);
            const double cexp = p.qA2() - p.B() - p.L() - 2.0 * p.twoj() - 2.0;
            // cosh(2w) = i sinh(alpha x)
            const cplx lp = cexp * std::log(std::cosh(w)) +
                            (1.0 + p.L()) * std::log(std::sinh(w)) -
                            0.25 * p.qA2() * cplx(0.0, std::sinh(p.alpha() * x));
            const cplx sw = std::sinh(w);
            return {lp, -sw * sw};
        }
        case FamilyTag::Sextic: {
            const auto& p = fam.sextic();
            if (x <= 0.0) throw DomainError("eigenfunction lives on x > 0");
            const double x2 = x * x;
            const cplx lp = (1.0 + p.L) * std::log(x) - 0.5 * p.b * x2 -
                            0.25 * p.qa2() * x2 * x2;
            return {lp, cplx(x2, 0.0)};
        }
        case FamilyTag::PTAnharmonic: {
            const auto& p = fam.ptanh();
            const double x2 = x * x;
            const cplx lp = cplx(-0.5 * p.b * x2,
                                 -p.ell * x - p.qa2() * x2 * x / 3.0);
            return {lp, cplx(x, 0.0)};
        }
    }
    throw DomainError("unknown family tag");
}

} // namespace

cplx eval_wavefunction(const EigenfunctionSpec& spec, double x) {
    const Assembled a = assemble(spec, x);
    const cplx factor = spec.family.tag == FamilyTag::PTAnharmonic
                            ? horner(spec.series_coefficients, a.u)
                            : horner(spec.rj_coefficients, a.u);
    return std::exp(a.log_prefactor) * factor;
}

cplx eval_wavefunction_log(const EigenfunctionSpec& spec, double x) {
    const Assembled a = assemble(spec, x);
    const cplx factor = spec.family.tag == FamilyTag::PTAnharmonic
                            ? horner(spec.series_coefficients, a.u)
                            : horner(spec.rj_coefficients, a.u);
    return a.log_prefactor + std::log(factor);
}

double normalize_numerically(const EigenfunctionSpec& spec, const GridConfig& grid) {
    grid.validate();
    const int n = grid.n_points;
    const double h = (grid.x_max - grid.x_min) / (n - 1);
    std::vector<double> f(static_cast<size_t>(n));
    double peak = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = grid.x_min + i * h;
        const double m = std::abs(eval_wavefunction(spec, x));
        if (!std::isfinite(m))
            throw NonNormalizableError("eigenfunction overflows inside the grid");
        peak = std::max(peak, m);
        f[static_cast<size_t>(i)] = m * m;
    }
    const double edge = std::max(std::sqrt(f.front()), std::sqrt(f.back()));
    if (peak == 0.0 || edge > 1e-8 * peak)
        throw NonNormalizableError("eigenfunction does not decay at the grid ends");
    return num::simpson(f, h);
}

} // namespace qes
