#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schur_div {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (bad index, non-prime modulus, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed its configured size budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t index)
        : Error(what), index_(index) {}

    /// 1-based index of the first item that would not fit.
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// A coloring rule cannot be evaluated at the requested argument.
class EvaluationInfeasible : public Error {
public:
    using Error::Error;
};

/// Malformed textual input; `position` is a 0-based character offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace schur_div
