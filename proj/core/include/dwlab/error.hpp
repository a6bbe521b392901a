#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dwlab {

enum class ErrorKind {
    OutOfRegion,
    InvalidLength,
    TooShort,
    DegenerateDenominator,
    DomainError,
    EmptySample,
    DegenerateStatistic,
    DegenerateTau,
    DegenerateTheta,
    NegativeDiscriminant,
    ThetaNearZero,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `what()` carries a human readable
/// message; `detail()` names the offending field or quantity when there is one.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail, const std::string& message);
    Error(ErrorKind kind, std::string detail);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace dwlab
