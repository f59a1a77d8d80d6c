#pragma once

#include <stdexcept>
#include <string>

namespace qhr {

/// Operand sizes do not match.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Input lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Two partitions are not comparable in dominance order.
class NoPathError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A documented precondition of a construction was violated.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An internal exact verification failed; carries the failing sub-check.
class VerificationError : public std::runtime_error {
public:
    VerificationError(std::string check, const std::string& detail)
        : std::runtime_error(check + ": " + detail), check_(std::move(check)) {}
    const std::string& check() const noexcept { return check_; }

private:
    std::string check_;
};

} // namespace qhr
