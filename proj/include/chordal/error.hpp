#pragma once

#include <stdexcept>
#include <string>

namespace chordal {

// Malformed input text or an invalid diagram/algebra.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// Structurally valid input that violates an operation's precondition.
class diagram_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration would exceed its configured budget.
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chordal
