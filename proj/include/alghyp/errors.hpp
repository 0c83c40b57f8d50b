#pragma once

#include <stdexcept>
#include <string>

namespace alghyp {

struct RingMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ArityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidMapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a configurable resource budget (S-pairs, enumeration grid,
/// complement cells, ...) is exhausted.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when repeated attempts to sample a suitable point fail.
struct SamplingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    std::size_t line;
    std::size_t column;
    ParseError(const std::string& msg, std::size_t line_, std::size_t column_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(column_) + ")"),
          line(line_),
          column(column_) {}
};

}  // namespace alghyp
