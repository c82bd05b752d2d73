#pragma once

#include <stdexcept>
#include <string>

namespace qes {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RangeError : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

/// qA^2 (resp. qa^2) vanishes where the quasi-exact recurrence has to divide by it.
struct DegenerateParameterError : Error { using Error::Error; };

/// Evaluation within the guard band of a csch/coth pole.
struct SingularityError : Error { using Error::Error; };

struct GammaPoleError : Error { using Error::Error; };
struct NonNormalizableError : Error { using Error::Error; };
struct ComplexPotentialError : Error { using Error::Error; };
struct NonConvergedError : Error { using Error::Error; };
struct StepUnderflowError : Error { using Error::Error; };

/// Sextic monomial coefficients cannot be matched; carries the consistency residual.
struct FitError : Error {
    FitError(const std::string& msg, double r) : Error(msg), residual(r) {}
    double residual;
};

} // namespace qes
