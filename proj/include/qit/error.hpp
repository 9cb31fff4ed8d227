#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qit {

/// Raised when an operation's precondition does not hold (dimension mismatch,
/// subcategory not syzygy-closed, hypothesis violated, ...).
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by the .alg reader; carries a 1-based source location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column), message_(msg) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Internal consistency failure of a cross-validated computation.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace qit
