#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace edgetangent {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// numeric_core
class BackendMismatch : public Error {
public:
    using Error::Error;
};

class OrderMismatch : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A floating operation produced NaN or an infinity.
class NonFiniteResult : public Error {
public:
    using Error::Error;
};

/// Operation outside its mathematical domain (square root of a negative, exact sqrt, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// simplex_core
class InvalidRadii : public Error {
public:
    using Error::Error;
};

class InvalidEdges : public Error {
public:
    using Error::Error;
};

/// Raised when an edge set admits no edge-tangent sphere. `row`/`col` name the
/// offending edge; for a non-positive radius `col` equals `row`.
class NotCircumscriptible : public Error {
public:
    NotCircumscriptible(const std::string& what, std::size_t row, std::size_t col)
        : Error(what), row_(row), col_(col) {}

    std::size_t row() const noexcept { return row_; }
    std::size_t col() const noexcept { return col_; }

private:
    std::size_t row_;
    std::size_t col_;
};

// metrics
class NotRealizable : public Error {
public:
    NotRealizable(const std::string& what, std::string margin)
        : Error(what), margin_(std::move(margin)) {}

    const std::string& margin() const noexcept { return margin_; }

private:
    std::string margin_;
};

class DegenerateBorder : public Error {
public:
    using Error::Error;
};

class DegenerateSimplex : public Error {
public:
    using Error::Error;
};

class NegativeOG : public Error {
public:
    using Error::Error;
};

// verify
class NotEmbeddable : public Error {
public:
    NotEmbeddable(const std::string& what, double smallest_pivot)
        : Error(what), smallest_pivot_(smallest_pivot) {}

    double smallest_pivot() const noexcept { return smallest_pivot_; }

private:
    double smallest_pivot_;
};

class SamplingBudgetExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace edgetangent
