#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace binomint {

enum class ErrorKind {
    DivisionByZero,
    ZeroToNegativePower,
    DegenerateIntegrand,
    DomainError,
    SyntaxError,
    NotBinomial,
    NotElementary,
    ExponentTooComplex,
    PoleError,
    DivergenceError,
    Nonconvergence,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library. `kind` drives CLI exit codes;
/// `position` is a 0-based byte offset for parser errors.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message,
          std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(message), kind_(kind), position_(position) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::optional<std::size_t> position() const noexcept { return position_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> position_;
};

}  // namespace binomint
