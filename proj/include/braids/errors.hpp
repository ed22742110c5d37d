#pragma once

#include <stdexcept>
#include <string>

namespace braids {

// Base class for everything thrown by this library.  The three broad
// categories matter for the CLI exit codes: bad user input, a genuine
// mathematical impossibility in the input, and internal assertions that
// signal a bug rather than a bad argument.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad arguments (wrong range, mismatched sizes, unparseable input).
struct UsageError : Error {
    using Error::Error;
};

struct OutOfRange : UsageError {
    using UsageError::UsageError;
};
struct DimensionMismatch : UsageError {
    using UsageError::UsageError;
};
struct CapExceeded : UsageError {
    using UsageError::UsageError;
};
struct NotAPartition : UsageError {
    using UsageError::UsageError;
};
struct NotNoncrossingPermutation : UsageError {
    using UsageError::UsageError;
};
struct ProductNotNoncrossing : UsageError {
    using UsageError::UsageError;
};
struct NotHypertree : UsageError {
    using UsageError::UsageError;
};
struct NoSharedEndpoint : UsageError {
    using UsageError::UsageError;
};
struct IdenticalEdges : UsageError {
    using UsageError::UsageError;
};
struct NonPositiveEntry : UsageError {
    using UsageError::UsageError;
};
struct DegenerateInput : UsageError {
    using UsageError::UsageError;
};
struct ZeroBase : UsageError {
    using UsageError::UsageError;
};
struct Singular : UsageError {
    using UsageError::UsageError;
};
struct UnsupportedToken : UsageError {
    using UsageError::UsageError;
};
struct ParseError : UsageError {
    using UsageError::UsageError;
};

// Internal assertions.  Reaching one of these means a library invariant
// failed, not that the caller passed something unreasonable.
struct InternalError : Error {
    using Error::Error;
};

struct ComplementNotNoncrossing : InternalError {
    using InternalError::InternalError;
};
struct NonLaurentEntry : InternalError {
    using InternalError::InternalError;
};
struct SlidingFailure : InternalError {
    using InternalError::InternalError;
};

}  // namespace braids
