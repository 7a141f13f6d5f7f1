#pragma once

#include <stdexcept>
#include <string>

namespace schurq {

// Base for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad user-facing input (CLI literals, malformed tableau text). Exit code 2.
struct ParseError : Error {
    using Error::Error;
};

// A partition literal or constructor argument is not strictly decreasing / positive.
struct InvalidPartition : ParseError {
    using ParseError::ParseError;
};

// Inner diagram not contained in the outer one where containment is required.
struct InvalidShape : Error {
    using Error::Error;
};

// A cell arrangement is not the difference of two shifted diagrams.
struct NotRealizable : Error {
    using Error::Error;
};

// Multiset difference with a part that does not occur.
struct NotSubset : Error {
    using Error::Error;
};

// Content size does not match the number of cells.
struct SizeMismatch : Error {
    using Error::Error;
};

// Out-of-domain numeric argument (e.g. strip size outside 1..lambda_1).
struct OutOfRange : Error {
    using Error::Error;
};

// Operation called outside its documented precondition.
struct PreconditionViolated : Error {
    using Error::Error;
};

// Operation requires a nonempty shape.
struct EmptyShape : Error {
    using Error::Error;
};

// Broken internal invariant; indicates a bug, maps to exit code 1.
struct InternalError : Error {
    using Error::Error;
};

[[noreturn]] inline void internal_fail(const std::string& what) {
    throw InternalError("internal invariant violated: " + what);
}

#define SCHURQ_CHECK(cond, msg)                                                \
    do {                                                                       \
        if (!(cond)) ::schurq::internal_fail(msg);                             \
    } while (0)

}  // namespace schurq
