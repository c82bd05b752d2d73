#include <qes/potentials.hpp>

#include <doctest.h>

#include "oracles.hpp"

#include <cmath>
#include <complex>

using namespace qes;
using cplx = std::complex<double>;

TEST_CASE("sextic potential with q = 0, L = 0 is the bare quadratic") {
    const auto fam = make_family(SexticParams::make(0, 1, 1, 0, 0));
    CHECK(eval_potential(fam, 2.0).real() == doctest::Approx(4.0).epsilon(1e-15));
    CHECK(eval_potential(fam, 2.0).imag() == 0.0);
}

TEST_CASE("q = 0 deformation terms vanish identically") {
    const auto p = PoschlTellerParams::make(1.5, 1.5, 0.0, 1.0, 1);
    const auto fam = make_family(FamilyTag::PoschlTeller, p);
    for (double x : {0.3, 0.9, 2.2}) {
        const double csch2 = 1.0 / std::pow(std::sinh(x), 2);
        const double sech2 = 1.0 / std::pow(std::cosh(x), 2);
        const double want = p.L() * (p.L() + 1) * csch2 - p.A() * (p.A() + 1) * sech2;
        CHECK(eval_potential(fam, x).real() == doctest::Approx(want).epsilon(1e-15));
    }
}

TEST_CASE("continuation restricted to the real axis equals the real evaluation") {
    const auto p = PoschlTellerParams::make(0.8, 2.0, 0.7, 1.2, 2);
    const auto fam = make_family(FamilyTag::PoschlTeller, p);
    for (double x : {0.4, 1.0, 2.5}) {
        const cplx a = analytic_continuation_pt(p, {x, 0.0});
        const cplx b = eval_potential(fam, x);
        CHECK(std::abs(a - b) == 0.0);
    }
}

TEST_CASE("half-coordinate identity V_gen(x) = V_pt(x/2)") {
    oracles::Draw draw(0x600d);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = draw.pt();
        const auto gen = transform_half_coordinate(p);
        CHECK(gen.tag == FamilyTag::GeneralizedPT);
        for (int k = 0; k < 20; ++k) {
            const double x = draw.uniform(0.2, 3.0) / p.alpha();
            const cplx lhs = eval_potential(gen, x);
            const cplx rhs = analytic_continuation_pt(p, {0.5 * x, 0.0});
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
            CHECK(lhs.imag() == 0.0);
        }
    }
}

TEST_CASE("complex-shift identity V_scarf(x) = V_pt(x/2 + i pi/(4 alpha))") {
    oracles::Draw draw(0x5ca2f);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = draw.pt();
        const auto scarf = transform_scarf(p);
        CHECK(scarf.tag == FamilyTag::ScarfPT);
        for (int k = 0; k < 20; ++k) {
            const double x = draw.uniform(-3.0, 3.0) / p.alpha();
            const cplx lhs = eval_potential(scarf, x);
            const cplx rhs =
                analytic_continuation_pt(p, {0.5 * x, 0.25 * M_PI / p.alpha()});
            CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
        }
    }
}

TEST_CASE("PT symmetry V(-x) = conj(V(x))") {
    oracles::Draw draw(0x97);
    for (int trial = 0; trial < 20; ++trial) {
        const auto p = draw.pt();
        const auto scarf = transform_scarf(p);
        for (int k = 0; k < 10; ++k) {
            const double x = draw.uniform(0.05, 2.5);
            const cplx a = eval_potential(scarf, x);
            const cplx b = eval_potential(scarf, -x);
            CHECK(std::abs(b - std::conj(a)) <= 1e-12 * (1.0 + std::abs(a)));
        }
        const auto anh = make_family(PTAnharmonicParams::make(
            draw.uniform(0.5, 2.0), 1.0, draw.uniform(0.1, 1.0),
            draw.uniform(-1.0, 1.0), draw.twoj_choice()));
        for (int k = 0; k < 10; ++k) {
            const double x = draw.uniform(0.05, 2.5);
            const cplx a = eval_potential(anh, x);
            const cplx b = eval_potential(anh, -x);
            CHECK(std::abs(b - std::conj(a)) <= 1e-12 * (1.0 + std::abs(a)));
        }
    }
}

TEST_CASE("general shift closure") {
    const auto p = PoschlTellerParams::make(1.0, 2.0, 0.5, 1.0, 2);
    SUBCASE("(a,b) = (1,0) is the identity transform") {
        auto f = transform_general_shift(p, 1.0, 0.0);
        const auto fam = make_family(FamilyTag::PoschlTeller, p);
        for (double x : {0.4, 1.1, 2.7})
            CHECK(std::abs(f(x) - eval_potential(fam, x)) == 0.0);
    }
    SUBCASE("(1/2, pi/4alpha) reproduces the complex-shift family") {
        auto f = transform_general_shift(p, 0.5, 0.25 * M_PI / p.alpha());
        const auto scarf = transform_scarf(p);
        for (double x : {-1.8, -0.3, 0.6, 2.1}) {
            const cplx want = eval_potential(scarf, x);
            CHECK(std::abs(f(x) - want) <= 1e-12 * (1.0 + std::abs(want)));
        }
    }
    SUBCASE("(1/2, 0) reproduces the half-coordinate family") {
        auto f = transform_general_shift(p, 0.5, 0.0);
        const auto gen = transform_half_coordinate(p);
        for (double x : {0.5, 1.3, 2.9}) {
            const cplx want = eval_potential(gen, x);
            CHECK(std::abs(f(x) - want) <= 1e-12 * (1.0 + std::abs(want)));
        }
    }
    SUBCASE("zero scale is rejected") {
        CHECK_THROWS_AS(transform_general_shift(p, 0.0, 1.0), DomainError);
    }
    SUBCASE("any shifted image stays PT symmetric") {
        // the hyperbolic form is even in its argument, so x -> a x + i b gives
        // V(-x) = conj(V(x)) for every real (a, b)
        auto f = transform_general_shift(p, 0.7, 0.9);
        for (double x : {0.3, 1.2, 2.4}) {
            const cplx v = f(x);
            CHECK(std::abs(f(-x) - std::conj(v)) <= 1e-12 * (1.0 + std::abs(v)));
        }
    }
}

TEST_CASE("leading singularity ratio of the half-coordinate map is 4") {
    const auto p = PoschlTellerParams::make(1.0, 2.0, 0.5, 1.0, 1);
    const auto gen = transform_half_coordinate(p);
    const auto pt = make_family(FamilyTag::PoschlTeller, p);
    const double x = 1e-4;
    const double ratio = eval_potential(gen, x).real() / eval_potential(pt, x).real();
    CHECK(ratio == doctest::Approx(4.0).epsilon(1e-6));
}

TEST_CASE("singularity and domain guards") {
    const auto p = PoschlTellerParams::make(1, 2, 0.5, 1.0, 0);
    const auto fam = make_family(FamilyTag::PoschlTeller, p);
    CHECK_THROWS_AS(eval_potential(fam, 1e-9), SingularityError);
    CHECK_THROWS_AS(eval_potential(fam, -1.0), DomainError);
    CHECK_THROWS_AS(eval_potential(fam, 0.0), DomainError);
    // pole of the continuation at alpha z = i pi
    CHECK_THROWS_AS(analytic_continuation_pt(p, {0.0, M_PI}), SingularityError);
    const auto sx = make_family(SexticParams::make(0, 1, 1, 1, 0));
    CHECK_THROWS_AS(eval_potential(sx, -0.5), DomainError);
}

TEST_CASE("operator scale of the coordinate-mapped families") {
    const auto p = PoschlTellerParams::make(1, 2, 0.5, 1.0, 1);
    CHECK(operator_scale(make_family(FamilyTag::PoschlTeller, p)) == 1.0);
    CHECK(operator_scale(transform_half_coordinate(p)) == 0.25);
    CHECK(operator_scale(transform_scarf(p)) == 0.25);
    CHECK(operator_scale(make_family(SexticParams::make(0, 1, 1, 1, 0))) == 1.0);
    const auto gen = transform_half_coordinate(p);
    for (double x : {0.5, 1.5})
        CHECK(schrodinger_potential(gen, x) == 0.25 * eval_potential(gen, x));
}

TEST_CASE("sextic coefficient round-trip") {
    oracles::Draw draw(0x4027);
    for (int trial = 0; trial < 25; ++trial) {
        const auto s = draw.sextic();
        const double S = 2 * s.L + 4 * s.twoj + 5;
        const double c2 = s.b * s.b - S * s.qa2();
        const double c4 = 2 * s.b * s.qa2();
        const double c6 = s.qa2() * s.qa2();
        const auto back = sextic_from_coefficients(c2, c4, c6, s.L, s.twoj);
        CHECK(back.b == doctest::Approx(s.b).epsilon(1e-12));
        CHECK(back.qa2() == doctest::Approx(s.qa2()).epsilon(1e-12));
    }
}

TEST_CASE("sextic coefficient fit rejections") {
    CHECK_THROWS_AS(sextic_from_coefficients(1.0, 0.0, 0.0, 0, 0), DomainError);
    CHECK_THROWS_AS(sextic_from_coefficients(1.0, 0.0, -1.0, 0, 0), DomainError);
    // inconsistent c2 carries the residual
    try {
        sextic_from_coefficients(5.0, 2.0, 1.0, 0.0, 0);
        FAIL("expected FitError");
    } catch (const FitError& e) {
        CHECK(std::abs(e.residual) > 1e-6);
    }
}

TEST_CASE("benchmark wells fit exactly in doubled units, not as printed") {
    // as printed (x^2 coefficient 1, L = 0) no half-integer j fits
    const double c4 = 1.0 / (2.0 * std::pow(61.0 / 8.0, 1.5));
    const double c6 = 1.0 / 7442.0;
    for (int twoj = 0; twoj <= 6; ++twoj)
        CHECK_THROWS_AS(sextic_from_coefficients(1.0, c4, c6, 0.0, twoj), FitError);
    // doubled equation with the planar centrifugal strength fits exactly
    const auto fit = sextic_from_coefficients(2.0, 2 * c4, 2 * c6, 0.5, 0);
    CHECK(fit.b == doctest::Approx(8.0 * std::sqrt(2.0) / std::sqrt(61.0)).epsilon(1e-14));
    CHECK(fit.qa2() == doctest::Approx(1.0 / 61.0).epsilon(1e-14));
}

TEST_CASE("sextic limit parameter map") {
    const auto p = PoschlTellerParams::make(1.0, 50.0, 0.5, 0.1, 1);
    const auto s = sextic_limit_params(p);
    CHECK(s.L == p.L());
    CHECK(s.twoj == p.twoj());
    CHECK(s.b == doctest::Approx(p.B() * 0.01));
    CHECK(s.a == doctest::Approx(0.5));
    CHECK(s.q == doctest::Approx(0.5));
}

TEST_CASE("sextic quadratic coefficient identity") {
    const auto s = SexticParams::make(1.0, 1.7, 1.0, 0.4, 2);
    const auto fam = make_family(s);
    const double S = 2 * s.L + 4 * s.twoj + 5;
    for (double x : {0.7, 1.4}) {
        const double rest = s.L * (s.L + 1) / (x * x) +
                            2 * s.b * s.qa2() * std::pow(x, 4) +
                            s.qa2() * s.qa2() * std::pow(x, 6);
        const double coeff = (eval_potential(fam, x).real() - rest) / (x * x);
        CHECK(coeff == doctest::Approx(s.b * s.b - S * s.qa2()).epsilon(1e-10));
    }
}

TEST_CASE("quartic limit map round-trips through the printed substitutions") {
    // forward build of the source record from a quartic target, then inversion
    const double b = 0.9, qa2 = 0.4, ell = 0.6, al = 0.2;
    const double r17 = std::sqrt(17.0);
    const double A = r17 * qa2 / std::pow(al, 3) + (7.0 / r17) * b / (al * al);
    const double L = 0.5 * (3.0 - r17 + (1.0 - 7.0 / r17) * al * b / qa2);
    const double q = 4.0 * qa2 / std::pow(al, 3) -
                     (1.0 / 17.0) * (1.0 + 7.0 / r17) * (2 * b * b + 17 * ell * qa2) /
                         (qa2 * al);
    const auto src = PoschlTellerParams::make(L, A, q, al, 1);
    const auto tgt = ptanh_limit_params(src);
    CHECK(tgt.b == doctest::Approx(b).epsilon(1e-10));
    CHECK(tgt.qa2() == doctest::Approx(qa2).epsilon(1e-10));
    CHECK(tgt.ell == doctest::Approx(ell).epsilon(1e-9));
    CHECK(tgt.twoj == 1);
}

TEST_CASE("quartic family evaluates the quartic form, real in the q -> 0 limit") {
    const auto p = PTAnharmonicParams::make(1.0, 1.0, 0.0, 0.0, 0);
    const auto fam = make_family(p);
    for (double x : {-1.5, 0.4, 2.0}) {
        const cplx v = eval_potential(fam, x);
        CHECK(v.real() == doctest::Approx(x * x).epsilon(1e-15));
        CHECK(v.imag() == 0.0);
    }
    // generic coefficients check against the monomial form
    const auto g = make_family(PTAnharmonicParams::make(0.8, 1.0, 0.5, 0.3, 2));
    const double qa2 = 0.5, b = 0.8, ell = 0.3;
    for (double x : {-1.2, 0.7}) {
        const cplx want(
            (b * b - 2 * ell * qa2) * x * x - qa2 * qa2 * std::pow(x, 4),
            2 * (b * ell - 3.0 * qa2) * x + 2 * qa2 * b * std::pow(x, 3));
        CHECK(std::abs(eval_potential(g, x) - want) <= 1e-14 * (1 + std::abs(want)));
    }
}
