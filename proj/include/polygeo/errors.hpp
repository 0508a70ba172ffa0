#pragma once

#include <stdexcept>
#include <string>

namespace polygeo {

/// Base class for contract violations and numerical failures inside the
/// library. The CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConstantPolynomialError : DomainError {
    ConstantPolynomialError()
        : DomainError("root solve requires a polynomial of degree >= 1") {}
};

/// Thrown when the root iteration exhausts its budget. Carries the best
/// (smallest) maximum relative residual seen, so callers can report it.
struct NonConvergenceError : DomainError {
    double best_residual;
    explicit NonConvergenceError(double residual)
        : DomainError("root iteration did not converge; best relative residual " +
                      std::to_string(residual)),
          best_residual(residual) {}
};

struct DegreeExceedsN : DomainError {
    using DomainError::DomainError;
};

struct DegreeTooLow : DomainError {
    using DomainError::DomainError;
};

struct InvalidRange : DomainError {
    using DomainError::DomainError;
};

struct PreconditionViolated : DomainError {
    using DomainError::DomainError;
};

/// Malformed input documents (JSON shape, arity). CLI exit code 2.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Filesystem failures. CLI exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polygeo
