#pragma once

#include <stdexcept>
#include <string>

namespace acg {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A group description is malformed (factor < 2, coordinate out of range, ...).
struct InvalidSpecError : Error {
    using Error::Error;
};

/// A member set claimed to be a subgroup is not closed or misses the identity.
struct InvalidSubgroupError : Error {
    using Error::Error;
};

/// A subgroup chain L <= G0 <= G does not actually hold.
struct InvalidChainError : Error {
    using Error::Error;
};

/// An exhaustive computation was requested beyond its configured size bound.
struct ResourceLimitError : Error {
    using Error::Error;
};

/// An operation was called outside its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

/// An internal consistency assertion backed by a proved statement failed.
/// Seeing this exception means a bug, never expected input behavior.
struct TheoremViolationError : Error {
    using Error::Error;
};

/// Malformed textual input (group/subset/element specs, JSON documents).
struct ParseError : Error {
    using Error::Error;
};

} // namespace acg
