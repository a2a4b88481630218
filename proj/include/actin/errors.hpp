#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace actin {

/// Raised for any argument or state that violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Seed text that cannot be parsed; `position()` is the 0-based character offset.
class SeedParseError : public InputError {
public:
    SeedParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace actin
