#pragma once

#include <stdexcept>
#include <string>

namespace blockage {

enum class ErrorCode {
    // configuration / scene construction
    MissingKey,
    UnknownKey,
    InvalidValue,
    ManifoldTooSmall,
    WrongBodyKind,
    // fields
    InvalidFrequency,
    SingularPoint,
    // diffraction
    GeometryError,
    NoConvergence,
    // mom2d
    TooCoarse,
    SingularMatrix,
    PointOnContour,
    LengthMismatch,
    // ensemble / imaging / stats
    ZeroStates,
    ZeroReference,
    DimsMismatch,
    BadWeights,
    OutOfRange,
    EmptySamples,
    BadBinWidth,
    // dataset I/O
    IoError,
    BadMagic,
    UnsupportedVersion,
    Truncated,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code),
          message_(message) {}

    ErrorCode code() const noexcept { return code_; }
    /// Message without the error-code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace blockage
