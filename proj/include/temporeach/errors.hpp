// SPDX-License-Identifier: MIT
// Error types shared by all temporeach modules.
#pragma once

#include <stdexcept>
#include <string>

namespace temporeach {

// Malformed instance/graph/formula/scheme text. `line` is 1-based when the
// input is line-oriented, 0 when no line context applies.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

// A scheme violates a structural constraint (merge bounds, independence,
// length cap, count budget, delay budget, duplicate delay entry, ...).
// The message names the first violated constraint.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exhaustive computation would exceed its configured evaluation budget.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested combination of options is outside the supported surface
// (e.g. non-strict paths in a solver, maximization under delays).
class UnsupportedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace temporeach
