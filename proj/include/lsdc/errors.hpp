#pragma once

#include <stdexcept>
#include <string>

namespace lsdc {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dimension mismatch (matrix product shapes, vector lengths, ...).
struct ShapeError : Error {
    using Error::Error;
};

/// Operands live over different fields.
struct FieldError : Error {
    using Error::Error;
};

/// Multiplicative inverse of zero requested.
struct DivisionByZero : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of the function.
struct DomainError : Error {
    using Error::Error;
};

/// A guarded enumeration or table would exceed its configured limit.
/// Operations fail loudly instead of silently approximating.
struct ResourceLimit : Error {
    using Error::Error;
};

/// The decoding matrix D lacks full row rank, so syndromes cannot
/// address every demanded column.
struct InfeasibleD : Error {
    using Error::Error;
};

/// A covering code with the requested radius needs more basis vectors
/// than the row budget allows.
struct InfeasibleRadius : Error {
    using Error::Error;
};

/// File or JSON schema problems (CLI maps these to exit code 2).
struct IoError : Error {
    using Error::Error;
};

} // namespace lsdc
