#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsim {

/// Base of every error raised by the simulator.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
    DimensionError(const std::string &what, std::size_t lhs, std::size_t rhs);

    std::size_t lhs() const noexcept { return lhs_; }
    std::size_t rhs() const noexcept { return rhs_; }

private:
    std::size_t lhs_;
    std::size_t rhs_;
};

/// Invalid argument to a constructor or operation (unknown name, index out of range, ...).
class ArgumentError : public Error {
public:
    using Error::Error;
};

/// A state that is required to be a computational basis vector is not one.
class NotBasisStateError : public Error {
public:
    NotBasisStateError() : Error("not a computational basis state") {}
};

/// The easy tensor-product separation could not factor the state.
class SeparationError : public Error {
public:
    explicit SeparationError(const std::string &detail)
        : Error("not easily separable: " + detail) {}
};

/// Requested qubit order cannot be produced from the current register layout.
class ReorderError : public Error {
public:
    using Error::Error;
};

/// File missing or unreadable.
class IoError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, std::string token, const std::string &message);

    std::size_t line() const noexcept { return line_; }
    const std::string &token() const noexcept { return token_; }

private:
    std::size_t line_;
    std::string token_;
};

/// Failure while executing an already parsed statement.
class ExecutionError : public Error {
public:
    ExecutionError(std::size_t line, const std::string &message);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace qsim
