#include <qes/potentials.hpp>

#include <cmath>
#include <string>

namespace qes {

namespace {
constexpr double kPoleGuard = 1e-8;
using cplx = std::complex<double>;
} // namespace

const char* family_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::PoschlTeller: return "poschl-teller";
        case FamilyTag::GeneralizedPT: return "generalized-pt";
        case FamilyTag::ScarfPT: return "scarf-pt";
        case FamilyTag::Sextic: return "sextic";
        case FamilyTag::PTAnharmonic: return "pt-anharmonic";
    }
    return "?";
}

FamilyTag family_from_name(const std::string& name) {
    if (name == "poschl-teller") return FamilyTag::PoschlTeller;
    if (name == "generalized-pt") return FamilyTag::GeneralizedPT;
    if (name == "scarf-pt") return FamilyTag::ScarfPT;
    if (name == "sextic") return FamilyTag::Sextic;
    if (name == "pt-anharmonic") return FamilyTag::PTAnharmonic;
    throw DomainError("unknown family: " + name);
}

PotentialFamily make_family(FamilyTag tag, const PoschlTellerParams& p) {
    if (tag != FamilyTag::PoschlTeller && tag != FamilyTag::GeneralizedPT &&
        tag != FamilyTag::ScarfPT)
        throw DomainError("family tag does not take Poschl-Teller parameters");
    return PotentialFamily{tag, p};
}
PotentialFamily make_family(const SexticParams& p) {
    return PotentialFamily{FamilyTag::Sextic, p};
}
PotentialFamily make_family(const PTAnharmonicParams& p) {
    return PotentialFamily{FamilyTag::PTAnharmonic, p};
}

namespace detail {

std::complex<double> pt_potential_at(const PoschlTellerParams& p, cplx z) {
    const double a2 = p.alpha() * p.alpha();
    const cplx s = std::sinh(p.alpha() * z);
    if (std::abs(s) < kPoleGuard)
        throw SingularityError("evaluation within the csch pole guard band");
    const cplx c = std::cosh(p.alpha() * z);
    const cplx s2 = s * s, c2 = c * c;
    const double qA2 = p.qA2();
    const cplx centrifugal = p.L() * (p.L() + 1.0) * a2 / s2;
    const cplx well = -p.A() * (p.A() + 1.0) * a2 / c2;
    const cplx tail =
        p.q() * (2.0 * p.B() * p.A() * p.A() * s2 + qA2 * p.A() * p.A() * s2 * s2) *
        a2 * (s2 / c2);
    return centrifugal + well + tail;
}

} // namespace detail

std::complex<double> analytic_continuation_pt(const PoschlTellerParams& p, cplx z) {
    return detail::pt_potential_at(p, z);
}

std::complex<double> eval_potential(const PotentialFamily& fam, double x) {
    switch (fam.tag) {
        case FamilyTag::PoschlTeller: {
            if (x <= 0.0) throw DomainError("Poschl-Teller potential lives on x > 0");
            return detail::pt_potential_at(fam.pt(), cplx(x, 0.0));
        }
        case FamilyTag::GeneralizedPT: {
            // V_pt(x/2) rewritten through full-argument functions:
            //   L(L+1) csch^2(u/2) - A(A+1) sech^2(u/2)
            //     = 2(L(L+1)+A(A+1)) csch^2 u + 2(L-A)(L+A+1) coth u csch u
            // with the q tail kept at the half argument.
            if (x <= 0.0) throw DomainError("generalized potential lives on x > 0");
            const auto& p = fam.pt();
            const double a2 = p.alpha() * p.alpha();
            const double u = p.alpha() * x;
            const double sh = std::sinh(u);
            if (std::abs(sh) < kPoleGuard)
                throw SingularityError("evaluation within the csch pole guard band");
            const double ch = std::cosh(u);
            const double hyp =
                2.0 * a2 *
                ((p.L() * (p.L() + 1.0) + p.A() * (p.A() + 1.0)) / (sh * sh) +
                 (p.L() - p.A()) * (p.L() + p.A() + 1.0) * ch / (sh * sh));
            const double sh2 = std::sinh(0.5 * u), ch2 = std::cosh(0.5 * u);
            const double s2 = sh2 * sh2;
            const double tail = p.q() *
                                (2.0 * p.B() * p.A() * p.A() * s2 +
                                 p.qA2() * p.A() * p.A() * s2 * s2) *
                                a2 * (s2 / (ch2 * ch2));
            return cplx(hyp + tail, 0.0);
        }
        case FamilyTag::ScarfPT: {
            // V_pt(x/2 + i pi/(4 alpha)) rewritten through full-argument
            // functions: the hyperbolic part becomes
            //   -2 alpha^2 [ (L(L+1)+A(A+1)) sech^2 u + i (L-A)(L+A+1) tanh u sech u ]
            // with the q tail at the shifted half argument.
            const auto& p = fam.pt();
            const double a2 = p.alpha() * p.alpha();
            const double u = p.alpha() * x;
            const double ch = std::cosh(u), th = std::tanh(u);
            const cplx hyp =
                -2.0 * a2 *
                cplx((p.L() * (p.L() + 1.0) + p.A() * (p.A() + 1.0)) / (ch * ch),
                     (p.L() - p.A()) * (p.L() + p.A() + 1.0) * th / ch);
            const cplx w(0.5 * u, 0.25 * M_PI);
            const cplx s = std::sinh(w), c = std::cosh(w);
            const cplx s2 = s * s;
            const cplx tail = p.q() *
                              (2.0 * p.B() * p.A() * p.A() * s2 +
                               p.qA2() * p.A() * p.A() * s2 * s2) *
                              a2 * (s2 / (c * c));
            return hyp + tail;
        }
        case FamilyTag::Sextic: {
            if (x <= 0.0) throw DomainError("sextic potential lives on x > 0");
            const auto& p = fam.sextic();
            const double qa2 = p.qa2();
            const double S = 2.0 * p.L + 4.0 * p.twoj + 5.0;
            const double x2 = x * x;
            return cplx(p.L * (p.L + 1.0) / x2 + (p.b * p.b - S * qa2) * x2 +
                            2.0 * p.b * qa2 * x2 * x2 + qa2 * qa2 * x2 * x2 * x2,
                        0.0);
        }
        case FamilyTag::PTAnharmonic: {
            const auto& p = fam.ptanh();
            const double qa2 = p.qa2();
            const double x2 = x * x;
            const double re = (p.b * p.b - 2.0 * p.ell * qa2) * x2 - qa2 * qa2 * x2 * x2;
            const double im = 2.0 * (p.b * p.ell - (1.0 + p.twoj) * qa2) * x +
                              2.0 * qa2 * p.b * x * x2;
            return cplx(re, im);
        }
    }
    throw DomainError("unknown family tag");
}

PotentialFamily transform_half_coordinate(const PoschlTellerParams& p) {
    return make_family(FamilyTag::GeneralizedPT, p);
}

PotentialFamily transform_scarf(const PoschlTellerParams& p) {
    return make_family(FamilyTag::ScarfPT, p);
}

std::function<std::complex<double>(double)>
transform_general_shift(const PoschlTellerParams& p, double a_scale, double b_shift) {
    if (a_scale == 0.0) throw DomainError("a_scale must be nonzero");
    return [p, a_scale, b_shift](double x) {
        return detail::pt_potential_at(p, cplx(a_scale * x, b_shift));
    };
}

double operator_scale(const PotentialFamily& fam) {
    return (fam.tag == FamilyTag::GeneralizedPT || fam.tag == FamilyTag::ScarfPT)
               ? 0.25
               : 1.0;
}

std::complex<double> schrodinger_potential(const PotentialFamily& fam, double x) {
    return operator_scale(fam) * eval_potential(fam, x);
}

SexticParams sextic_limit_params(const PoschlTellerParams& p, int /*m*/) {
    const double a2 = p.alpha() * p.alpha();
    return SexticParams::make(p.L(), p.B() * a2, p.A() * a2, p.q(), p.twoj());
}

SexticParams sextic_from_coefficients(double c2, double c4, double c6, double L,
                                      int twoj) {
    if (!(c6 > 0.0)) throw DomainError("sextic coefficient c6 must be positive");
    const double qa2 = std::sqrt(c6);
    const double b = c4 / (2.0 * qa2);
    const double S = 2.0 * L + 4.0 * twoj + 5.0;
    const double residual = b * b - S * qa2 - c2;
    if (std::abs(residual) > 1e-6)
        throw FitError("sextic coefficients inconsistent with a quasi-exact well",
                       residual);
    return SexticParams::make(L, b, 1.0, qa2, twoj);
}

PTAnharmonicParams ptanh_limit_params(const PoschlTellerParams& p) {
    if (p.qA2() == 0.0)
        throw DegenerateParameterError("qA^2 = 0 in the quartic-limit map");
    const double r17 = std::sqrt(17.0);
    const double al = p.alpha();
    // L = (3 - sqrt17)/2 + (1 - 7/sqrt17) alpha b / (2 qa2)
    const double kappa = (2.0 * p.L() - 3.0 + r17) / ((1.0 - 7.0 / r17) * al);
    // A = sqrt17 qa2/alpha^3 + (7/sqrt17) b/alpha^2, with b = kappa qa2
    const double denom = r17 / (al * al * al) + 7.0 * kappa / (r17 * al * al);
    const double qa2 = p.A() / denom;
    const double b = kappa * qa2;
    // q_source = 4 qa2/alpha^3 - (1/17)(1 + 7/sqrt17)(2 b^2 + 17 ell qa2)/(qa2 alpha)
    const double lhs = 4.0 * qa2 / (al * al * al) - p.q();
    const double ell =
        (lhs * 17.0 * qa2 * al / (1.0 + 7.0 / r17) - 2.0 * b * b) / (17.0 * qa2);
    return PTAnharmonicParams::make(b, 1.0, qa2, ell, p.twoj());
}

} // namespace qes
