#pragma once

#include <qes/errors.hpp>

namespace qes {

/// Parameter set shared by the Poschl-Teller family and its half-coordinate /
/// complex-shift relatives. The well strength B is always derived from
/// (L, A, q, j); it can never be set independently. Half-integer j is stored
/// as the integer twoj so that no float comparison of half-integers happens.
class PoschlTellerParams {
public:
    /// Throws DomainError if the radicand 1 + 4A(A+1+(2L+8j+5)qA) is negative,
    /// if alpha <= 0, or if twoj < 0.
    static PoschlTellerParams make(double L, double A, double q, double alpha, int twoj);

    /// Default record: L = A = q = 0, alpha = 1, j = 0 (B = -2 per the
    /// derived-strength formula). Valid but degenerate; use make() for real work.
    PoschlTellerParams() = default;

    double L() const { return L_; }
    double A() const { return A_; }
    double q() const { return q_; }
    double alpha() const { return alpha_; }
    int twoj() const { return twoj_; }
    double j() const { return 0.5 * twoj_; }
    double B() const { return B_; }
    double qA2() const { return q_ * A_ * A_; }

private:
    double L_ = 0, A_ = 0, q_ = 0, alpha_ = 1, B_ = -2;
    int twoj_ = 0;
};

/// Radial sextic oscillator parameters. Only the combinations q*a^2 and b enter
/// the potential and the recurrence; a and q are kept separate to mirror the
/// coefficient bookkeeping of the x^4 and x^6 terms.
struct SexticParams {
    double L = 0, b = 0, a = 1, q = 0;
    int twoj = 0;

    static SexticParams make(double L, double b, double a, double q, int twoj);
    double qa2() const { return q * a * a; }
    double j() const { return 0.5 * twoj; }
};

/// PT-symmetric quartic anharmonic oscillator parameters. ell is the linear
/// phase parameter of the eigenfunctions; it enters the energy as ell^2 and is
/// treated as an independent real input.
struct PTAnharmonicParams {
    double b = 0, a = 1, q = 0, ell = 0;
    int twoj = 0;

    static PTAnharmonicParams make(double b, double a, double q, double ell, int twoj);
    double qa2() const { return q * a * a; }
    double j() const { return 0.5 * twoj; }
};

} // namespace qes
