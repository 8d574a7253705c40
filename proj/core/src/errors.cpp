#include "blockage/errors.hpp"

namespace blockage {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::MissingKey: return "MissingKey";
    case ErrorCode::UnknownKey: return "UnknownKey";
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::ManifoldTooSmall: return "ManifoldTooSmall";
    case ErrorCode::WrongBodyKind: return "WrongBodyKind";
    case ErrorCode::InvalidFrequency: return "InvalidFrequency";
    case ErrorCode::SingularPoint: return "SingularPoint";
    case ErrorCode::GeometryError: return "GeometryError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::TooCoarse: return "TooCoarse";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::PointOnContour: return "PointOnContour";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ZeroStates: return "ZeroStates";
    case ErrorCode::ZeroReference: return "ZeroReference";
    case ErrorCode::DimsMismatch: return "DimsMismatch";
    case ErrorCode::BadWeights: return "BadWeights";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptySamples: return "EmptySamples";
    case ErrorCode::BadBinWidth: return "BadBinWidth";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::BadMagic: return "BadMagic";
    case ErrorCode::UnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::Truncated: return "Truncated";
    }
    return "UnknownError";
}

} // namespace blockage
