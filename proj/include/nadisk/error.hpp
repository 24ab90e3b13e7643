#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nadisk {

enum class ErrorKind {
    IndeterminateMag,
    ZeroToNonpositivePower,
    ZeroSeries,
    UncertifiedRadius,
    CenterOutsideDisk,
    DuplicateNodes,
    IndeterminatePivot,
    SeparatorCollision,
    VerificationFailed,
    InfeasibleHorizon,
    TargetOutOfRange,
    TargetNotInValueGroup,
    DenseSetTooCoarse,
    DuplicateCenters,
    InvalidArgument,
    SchemaError,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries a kind so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace nadisk
