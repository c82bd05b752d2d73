#include <qes/bd_polynomials.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qes {

using ext_float = boost::multiprecision::cpp_bin_float_50;

std::array<double, 3> recurrence_coefficients(const PoschlTellerParams& p, int m) {
    if (m < 0 || m > p.twoj())
        throw RangeError("recurrence coefficient index m out of [0, 2j]");
    const double gamma = 2.0 * m * (2.0 * p.L() + 2.0 * m + 1.0);
    const double mu = 4.0 * m * p.qA2();
    const double beta = 4.0 * m * (p.B() + 2.0 * p.twoj() - m + 1.0);
    return {gamma, mu, beta};
}

namespace {

template <class Real>
std::vector<EnergyPolynomial> round_to_output(const std::vector<std::vector<Real>>& raw) {
    std::vector<EnergyPolynomial> out;
    out.reserve(raw.size());
    for (const auto& poly : raw) {
        EnergyPolynomial p;
        p.monic = true;
        p.coefficients.reserve(poly.size());
        for (const auto& c : poly) p.coefficients.push_back(static_cast<double>(c));
        if (!p.coefficients.empty()) p.coefficients.back() = 1.0; // monic exactly
        out.push_back(std::move(p));
    }
    return out;
}

void check_generation_preconditions(double qa2, int twoj, int upto, bool four_term) {
    if (upto < 0 || upto > twoj + 1)
        throw RangeError("upto must lie in [0, 2j+1]");
    // The three-term chains divide by qA^2 only implicitly (the monic form is
    // division free), but qA^2 = 0 collapses the quasi-exact structure; the
    // four-term chain divides explicitly at every intermediate step.
    const bool needs_q = four_term ? (upto >= 1 && twoj > 0) : (upto > 1);
    if (needs_q && qa2 == 0.0)
        throw DegenerateParameterError(
            "qA^2 = 0: exactly solvable degenerate case, polynomial generation refused");
}

} // namespace

std::vector<EnergyPolynomial> generate_pt_polynomials(const PoschlTellerParams& p,
                                                      int upto, Precision prec) {
    check_generation_preconditions(p.qA2(), p.twoj(), upto, false);
    if (prec == Precision::Extended)
        return round_to_output(detail::pt_polynomial_core<ext_float>(
            ext_float(p.L()), ext_float(p.B()), ext_float(p.qA2()), p.twoj(), upto));
    return round_to_output(detail::pt_polynomial_core<double>(
        p.L(), p.B(), p.qA2(), p.twoj(), upto));
}

std::vector<EnergyPolynomial> generate_sextic_polynomials(const SexticParams& p,
                                                          int upto, Precision prec) {
    check_generation_preconditions(p.qa2(), p.twoj, upto, false);
    if (prec == Precision::Extended)
        return round_to_output(detail::sextic_polynomial_core<ext_float>(
            ext_float(p.L), ext_float(p.b), ext_float(p.qa2()), p.twoj, upto));
    return round_to_output(detail::sextic_polynomial_core<double>(
        p.L, p.b, p.qa2(), p.twoj, upto));
}

std::vector<EnergyPolynomial> generate_ptanh_polynomials(const PTAnharmonicParams& p,
                                                         int upto, Precision prec) {
    check_generation_preconditions(p.qa2(), p.twoj, upto, true);
    if (prec == Precision::Extended)
        return round_to_output(detail::ptanh_polynomial_core<ext_float>(
            ext_float(p.b), ext_float(p.ell), ext_float(p.qa2()), p.twoj, upto));
    return round_to_output(detail::ptanh_polynomial_core<double>(
        p.b, p.ell, p.qa2(), p.twoj, upto));
}

} // namespace qes
