#pragma once

#include <complex>
#include <vector>

namespace qes {

/// Dense polynomial in the spectral variable (lambda or epsilon), coefficients
/// in ascending powers. When monic is set the leading coefficient is exactly 1.
struct EnergyPolynomial {
    std::vector<double> coefficients;
    bool monic = false;

    /// Index of the last nonzero coefficient (0 for the zero polynomial).
    int degree() const {
        for (int i = static_cast<int>(coefficients.size()) - 1; i > 0; --i)
            if (coefficients[static_cast<size_t>(i)] != 0.0) return i;
        return 0;
    }
};

/// Horner evaluation; exact for degree 0.
inline double eval_polynomial(const EnergyPolynomial& p, double x) {
    if (p.coefficients.empty()) return 0.0;
    double acc = 0.0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

inline std::complex<double> eval_polynomial(const EnergyPolynomial& p,
                                            std::complex<double> x) {
    if (p.coefficients.empty()) return 0.0;
    std::complex<double> acc = 0.0;
    for (auto it = p.coefficients.rbegin(); it != p.coefficients.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace qes
