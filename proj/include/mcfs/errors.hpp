#pragma once

#include <stdexcept>
#include <string>

namespace mcfs {

// Error taxonomy used across the library. Each condition that callers are
// expected to distinguish gets its own type; everything else is a plain
// std::runtime_error.

struct EmptyZeroSet : std::runtime_error {
    explicit EmptyZeroSet(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyInput : std::runtime_error {
    explicit EmptyInput(const std::string& what) : std::runtime_error(what) {}
};

struct DisjointTimeRanges : std::runtime_error {
    explicit DisjointTimeRanges(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateGradient : std::runtime_error {
    explicit DegenerateGradient(const std::string& what) : std::runtime_error(what) {}
};

struct NonMeanConvexPoint : std::runtime_error {
    explicit NonMeanConvexPoint(const std::string& what) : std::runtime_error(what) {}
};

struct RadiusTooSmall : std::runtime_error {
    explicit RadiusTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct TimeOutOfRange : std::runtime_error {
    explicit TimeOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct SurgeryInWindow : std::runtime_error {
    explicit SurgeryInWindow(const std::string& what) : std::runtime_error(what) {}
};

struct SlabViolation : std::runtime_error {
    explicit SlabViolation(const std::string& what) : std::runtime_error(what) {}
};

struct PreconditionViolated : std::runtime_error {
    explicit PreconditionViolated(const std::string& what) : std::runtime_error(what) {}
};

struct CFLViolation : std::runtime_error {
    explicit CFLViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NotDisjointAtStart : std::runtime_error {
    explicit NotDisjointAtStart(const std::string& what) : std::runtime_error(what) {}
};

struct NeckTooCoarse : std::runtime_error {
    explicit NeckTooCoarse(const std::string& what) : std::runtime_error(what) {}
};

struct ExteriorBlowup : std::runtime_error {
    explicit ExteriorBlowup(const std::string& what) : std::runtime_error(what) {}
};

struct NeckDetectionFailure : std::runtime_error {
    explicit NeckDetectionFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeTooLargeForGrid : std::runtime_error {
    explicit ShapeTooLargeForGrid(const std::string& what) : std::runtime_error(what) {}
};

struct TubeTooThinForGrid : std::runtime_error {
    explicit TubeTooThinForGrid(const std::string& what) : std::runtime_error(what) {}
};

struct BeadTooSmallForGrid : std::runtime_error {
    explicit BeadTooSmallForGrid(const std::string& what) : std::runtime_error(what) {}
};

struct MembershipFailure : std::runtime_error {
    explicit MembershipFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mcfs
