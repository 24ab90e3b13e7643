#include "nadisk/error.hpp"

namespace nadisk {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::IndeterminateMag: return "IndeterminateMag";
    case ErrorKind::ZeroToNonpositivePower: return "ZeroToNonpositivePower";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::UncertifiedRadius: return "UncertifiedRadius";
    case ErrorKind::CenterOutsideDisk: return "CenterOutsideDisk";
    case ErrorKind::DuplicateNodes: return "DuplicateNodes";
    case ErrorKind::IndeterminatePivot: return "IndeterminatePivot";
    case ErrorKind::SeparatorCollision: return "SeparatorCollision";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
    case ErrorKind::InfeasibleHorizon: return "InfeasibleHorizon";
    case ErrorKind::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorKind::TargetNotInValueGroup: return "TargetNotInValueGroup";
    case ErrorKind::DenseSetTooCoarse: return "DenseSetTooCoarse";
    case ErrorKind::DuplicateCenters: return "DuplicateCenters";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SchemaError: return "SchemaError";
    }
    return "Unknown";
}

} // namespace nadisk
