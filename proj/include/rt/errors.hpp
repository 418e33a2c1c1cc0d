#pragma once

#include <stdexcept>
#include <string>

namespace rt {

/// Thrown when an exhaustive enumeration would exceed its configured cap
/// (partition scans over too many vertices, oracle runs over too many edges).
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a complete search gives up before proving its answer; the
/// result is indeterminate, not negative.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input file; `line` is 1-based, 0 when not tied to a line.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_number, const std::string& message)
        : std::runtime_error(line_number > 0
                                 ? "line " + std::to_string(line_number) + ": " + message
                                 : message),
          line(line_number) {}
};

}  // namespace rt
