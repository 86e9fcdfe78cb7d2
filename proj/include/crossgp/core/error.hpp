#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace crossgp {

// Invalid configuration: bad hyperparameters, mismatched shapes, unknown names.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input. Line numbers are 1-based; 0 means "not line-specific".
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message)
        , line_(line)
    {
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// A truth table or exhaustive enumeration would exceed the supported input count.
class SizeLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace crossgp
