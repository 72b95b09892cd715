// Error types shared across the library.
#pragma once

#include <stdexcept>
#include <string>

namespace psi {

// Bad data supplied by a caller or a user (empty index list, even double
// factorial argument, zero multiplicity, ...).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented operation precondition was violated by the caller.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

// A mathematical invariant failed: strategy disagreement at a cache insert,
// non-exact polynomial division, broken termination measure. Always a bug
// or an inconsistent input table, never a user error.
struct InternalInconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

// Cache file with a missing/unsupported header.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; `position` is a character offset for correlator
// literals and a 1-based line number for cache files.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t position)
        : std::runtime_error(msg), position(position) {}
    std::size_t position;
};

} // namespace psi
