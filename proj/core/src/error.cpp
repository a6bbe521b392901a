#include "dwlab/error.hpp"

namespace dwlab {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::OutOfRegion: return "OutOfRegion";
        case ErrorKind::InvalidLength: return "InvalidLength";
        case ErrorKind::TooShort: return "TooShort";
        case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::EmptySample: return "EmptySample";
        case ErrorKind::DegenerateStatistic: return "DegenerateStatistic";
        case ErrorKind::DegenerateTau: return "DegenerateTau";
        case ErrorKind::DegenerateTheta: return "DegenerateTheta";
        case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
        case ErrorKind::ThetaNearZero: return "ThetaNearZero";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, std::string detail, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + "(" + detail + "): " + message),
      kind_(kind),
      detail_(std::move(detail)) {}

Error::Error(ErrorKind kind, std::string detail)
    : std::runtime_error(std::string(to_string(kind)) + "(" + detail + ")"),
      kind_(kind),
      detail_(std::move(detail)) {}

}  // namespace dwlab
