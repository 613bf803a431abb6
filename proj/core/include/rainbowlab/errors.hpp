#pragma once

#include <stdexcept>
#include <string>

namespace rainbowlab {

// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exhaustive search refused: the instance exceeds the configured edge budget
// or the wall-clock limit was hit. Never converted into an approximate answer.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed graph or coloring file.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace rainbowlab
