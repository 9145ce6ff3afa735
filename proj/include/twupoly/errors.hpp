// Error types shared by all twupoly modules.
#pragma once

#include <stdexcept>
#include <string>

namespace twupoly {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (universe mismatch,
/// bad partition, non-leaf vertex, unknown label, ...).
class ContractError : public Error {
public:
    using Error::Error;
};

/// Raised by inverse() on a singular matrix.
class SingularMatrixError : public Error {
public:
    using Error::Error;
};

/// Raised by pivot() when the principal submatrix M[X] is singular.
class SingularPrincipalMinorError : public Error {
public:
    using Error::Error;
};

/// A subset enumeration was requested beyond the configured size cap.
class SizeCapError : public Error {
public:
    using Error::Error;
};

/// Raised by gap_report() on the zero polynomial.
class ZeroPolynomialError : public Error {
public:
    using Error::Error;
};

/// Raised by verify_product_formula() when the matrix is not
/// block-diagonal with respect to the given partition.
class NotBlockDiagonalError : public Error {
public:
    using Error::Error;
};

/// Raised for operators a computation does not support
/// (closed forms exist only for taudeltatau, deltatau, taudelta).
class UnsupportedOperatorError : public Error {
public:
    using Error::Error;
};

/// Text-format parse failure; carries 1-based line and column.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line, int column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

/// A mathematically guaranteed invariant failed at runtime.  Seeing this
/// means the arithmetic is buggy, not that the input is bad.
class InternalInvariantError : public Error {
public:
    using Error::Error;
};

}  // namespace twupoly
