#pragma once

#include <stdexcept>
#include <string>

namespace nilrep {

/// Malformed or mismatched input structure (wrong shape, wrong field, bad index).
struct StructuralError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Mathematically out-of-domain request (division by zero, rank below minimum, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A configuration the implementation deliberately does not cover.
struct UnsupportedError : std::domain_error {
    using std::domain_error::domain_error;
};

/// An invariant the code itself guarantees was violated; always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace nilrep
