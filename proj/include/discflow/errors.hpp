#pragma once

#include <stdexcept>
#include <string>

namespace discflow {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct CenterOnLoopError : Error {
    explicit CenterOnLoopError(const std::string& msg) : Error(msg) {}
};

struct SamplingTooCoarseError : Error {
    explicit SamplingTooCoarseError(const std::string& msg) : Error(msg) {}
};

struct OutsideAnnulusError : Error {
    explicit OutsideAnnulusError(const std::string& msg) : Error(msg) {}
};

struct BoundaryViolationError : Error {
    explicit BoundaryViolationError(const std::string& msg) : Error(msg) {}
};

struct InvalidShapeError : Error {
    explicit InvalidShapeError(const std::string& msg) : Error(msg) {}
};

struct StepRejectionError : Error {
    explicit StepRejectionError(const std::string& msg) : Error(msg) {}
};

struct NotClosedError : Error {
    explicit NotClosedError(const std::string& msg) : Error(msg) {}
};

struct OutsideDiscError : Error {
    explicit OutsideDiscError(const std::string& msg) : Error(msg) {}
};

struct RootIsolationFailureError : Error {
    explicit RootIsolationFailureError(const std::string& msg) : Error(msg) {}
};

struct PreconditionRhoError : Error {
    explicit PreconditionRhoError(const std::string& msg) : Error(msg) {}
};

struct SerializationError : Error {
    explicit SerializationError(const std::string& msg) : Error(msg) {}
};

} // namespace discflow
