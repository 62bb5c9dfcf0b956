#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace inversive {

enum class ErrorKind {
    ZeroRadius,
    NonUnitNormal,
    NotNormalized,
    NotSpacelike,
    SingularMatrix,
    ComplexRoots,
    NotTangent,
    DegenerateTriple,
    InvalidIndex,
    InvalidSeed,
    InvalidLimits,
    EmptyGasket,
    BadDimension,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the kernel carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable exit status.
class GeometryError : public std::runtime_error {
public:
    GeometryError(ErrorKind kind, const std::string &message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace inversive
