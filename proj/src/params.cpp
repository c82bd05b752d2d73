#include <qes/params.hpp>

#include <cmath>

namespace qes {

PoschlTellerParams PoschlTellerParams::make(double L, double A, double q,
                                            double alpha, int twoj) {
    if (twoj < 0)
        throw DomainError("twoj must be a non-negative integer");
    if (!(alpha > 0.0))
        throw DomainError("alpha must be positive");
    const double S = 2.0 * L + 4.0 * twoj + 5.0; // 2L + 8j + 5
    const double radicand = 1.0 + 4.0 * A * (A + 1.0 + S * q * A);
    if (radicand < 0.0)
        throw DomainError("radicand of the B formula is negative");
    PoschlTellerParams p;
    p.L_ = L;
    p.A_ = A;
    p.q_ = q;
    p.alpha_ = alpha;
    p.twoj_ = twoj;
    p.B_ = -0.5 * (S - std::sqrt(radicand));
    return p;
}

SexticParams SexticParams::make(double L, double b, double a, double q, int twoj) {
    if (twoj < 0)
        throw DomainError("twoj must be a non-negative integer");
    SexticParams p;
    p.L = L;
    p.b = b;
    p.a = a;
    p.q = q;
    p.twoj = twoj;
    return p;
}

PTAnharmonicParams PTAnharmonicParams::make(double b, double a, double q,
                                            double ell, int twoj) {
    if (twoj < 0)
        throw DomainError("twoj must be a non-negative integer");
    PTAnharmonicParams p;
    p.b = b;
    p.a = a;
    p.q = q;
    p.ell = ell;
    p.twoj = twoj;
    return p;
}

} // namespace qes
