#include "qsim/error.hpp"

#include <utility>

namespace qsim {

DimensionError::DimensionError(const std::string &what, std::size_t lhs, std::size_t rhs)
    : Error(what + ": dimension mismatch (" + std::to_string(lhs) + " vs " +
            std::to_string(rhs) + ")"),
      lhs_(lhs), rhs_(rhs) {}

ParseError::ParseError(std::size_t line, std::string token, const std::string &message)
    : Error("line " + std::to_string(line) + ": " + message +
            (token.empty() ? std::string() : " near '" + token + "'")),
      line_(line), token_(std::move(token)) {}

ExecutionError::ExecutionError(std::size_t line, const std::string &message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

} // namespace qsim
