#ifndef LDG_ERRORS_HPP
#define LDG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ldg {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of an operation
// (e.g. the (q,omega) change of variables at q=0).
struct DomainError : Error {
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Non-degeneracy assumption c2 != 0 violated.
struct DegeneracyError : Error {
    explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

// |gamma3| below threshold: mu = 3*lambda/gamma3^2 undefined.
struct MulticriticalError : Error {
    explicit MulticriticalError(const std::string& msg) : Error(msg) {}
};

// The normalization quadratic for k2 has no real root: lambda too
// large for the near-identity normal form to exist.
struct OutsidePerturbativeRegime : Error {
    explicit OutsidePerturbativeRegime(const std::string& msg) : Error(msg) {}
};

// A polynomial expected to be invariant could not be written in the
// T2/T3 basis; carries the residual in canonical text form.
struct DecompositionError : Error {
    DecompositionError(const std::string& msg, std::string residual_text)
        : Error(msg), residual(std::move(residual_text)) {}
    std::string residual;
};

// Multi-start minimization produced no converged point.
struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Analytic prediction and brute-force oracle disagree.
struct MismatchError : Error {
    explicit MismatchError(const std::string& msg) : Error(msg) {}
};

}  // namespace ldg

#endif
