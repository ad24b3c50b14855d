#pragma once
#include <stdexcept>
#include <string>

namespace loopalg {

// Error categories map 1:1 onto CLI exit codes (see tools/loopalg_cli.cpp).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

// Mismatched ranks/truncations, unsupported surface configuration.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// Precondition on a value (wrong degree-zero part, non-Torelli input, ...).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string &msg) : std::runtime_error(msg) {}
};

// A series that is not guaranteed to terminate at the given truncation.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace loopalg
