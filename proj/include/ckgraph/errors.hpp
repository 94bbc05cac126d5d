#pragma once

#include <stdexcept>
#include <string>

namespace ckgraph {

/// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input (JSON, enumeration files, unknown vertex ids).
struct parse_error : error {
    using error::error;
};

/// A documented precondition of an operation does not hold.
struct precondition_error : error {
    using error::error;
};

/// A brute-force size guard was exceeded.
struct size_limit_error : error {
    using error::error;
};

/// An internal consistency check failed. Raised when a verification that
/// must succeed by construction (or by a proved theorem) does not.
struct internal_error : error {
    using error::error;
};

} // namespace ckgraph
