#pragma once

#include <stdexcept>
#include <string>

namespace egf {

/* Base for all errors thrown by the library. Parse errors and invariant
 * violations are kept apart so the CLI can map them to distinct exit codes. */
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    using Error::Error;
};

/* A structural invariant of the input data is violated. */
struct InvariantError : Error {
    using Error::Error;
};

struct AmbientMismatch : InvariantError {
    using InvariantError::InvariantError;
};
struct NotContained : InvariantError {
    using InvariantError::InvariantError;
};
struct RangeUnbounded : InvariantError {
    using InvariantError::InvariantError;
};
struct NotChainMap : InvariantError {
    using InvariantError::InvariantError;
};
struct NotADifferential : InvariantError {
    using InvariantError::InvariantError;
};
struct BadBidegree : InvariantError {
    using InvariantError::InvariantError;
};
struct InvalidFiltration : InvariantError {
    using InvariantError::InvariantError;
};
struct BadRange : InvariantError {
    using InvariantError::InvariantError;
};
struct BadLevels : InvariantError {
    using InvariantError::InvariantError;
};
struct RankDeficient : InvariantError {
    using InvariantError::InvariantError;
};
struct UnorderedComponents : InvariantError {
    using InvariantError::InvariantError;
};
struct CapExceedsSystem : InvariantError {
    using InvariantError::InvariantError;
};
struct DuplicateLabel : InvariantError {
    using InvariantError::InvariantError;
};
struct UnknownLabel : InvariantError {
    using InvariantError::InvariantError;
};

/* A limit was requested past the levels where it can be read off. */
struct NotStabilized : Error {
    int degree;
    NotStabilized(const std::string& what, int deg) : Error(what), degree(deg) {}
};
struct NotSurjective : InvariantError {
    using InvariantError::InvariantError;
};

}  // namespace egf
