#pragma once

#include <stdexcept>
#include <string>

namespace fracext {

/** @brief Root of every error the library raises. */
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Evaluation requested exactly at a kernel singularity.
class SingularityError : public Error {
public:
    using Error::Error;
};

/// Caller contract (smoothness, sign, vanishing) not met.
class PreconditionError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operator/function combination the library does not instantiate.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Command-line or configuration misuse.
class UsageError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

/** @brief A quadrature or extrapolation that missed its tolerance; carries the best estimate. */
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double best, double error_estimate)
        : Error(what + " (best " + std::to_string(best) + ", error estimate " +
                std::to_string(error_estimate) + ")"),
          best_(best), err_(error_estimate) {}

    double best() const { return best_; }
    double error_estimate() const { return err_; }

private:
    double best_;
    double err_;
};

} // namespace fracext
