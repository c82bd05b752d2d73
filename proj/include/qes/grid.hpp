#pragma once

#include <qes/common.hpp>
#include <qes/errors.hpp>

namespace qes {

enum class Boundary { Dirichlet };

/// Uniform grid for the finite-difference oracle and numerical quadrature.
struct GridConfig {
    double x_min = 1e-3;
    double x_max = 12.0;
    int n_points = 4001;
    Boundary boundary = Boundary::Dirichlet;
    Precision precision = Precision::Double;

    void validate() const {
        if (!(x_min < x_max)) throw DomainError("grid requires x_min < x_max");
        if (n_points < 64) throw DomainError("grid requires n_points >= 64");
    }
};

} // namespace qes
