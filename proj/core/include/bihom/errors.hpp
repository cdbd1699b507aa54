#pragma once

#include <stdexcept>
#include <string>

namespace bihom {

/// Shape violation: mismatched dimensions, malformed tables, bad parities.
struct StructuralError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structure map required to be invertible is singular.  Carries the
/// conventional name of the offending map ("alpha", "beta", ...).
struct NotBijectiveError : std::runtime_error {
    explicit NotBijectiveError(const std::string& map_name)
        : std::runtime_error(map_name + " is not bijective"), map(map_name) {}
    std::string map;
};

struct NotFixedPointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two independent evaluation routes of the same condition disagreed.
/// This is an implementation bug, never a property of the input data.
struct InternalInconsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Malformed input document (bad JSON, bad fraction literal, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed document describing an invalid structure (parity violation,
/// index out of range, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bihom
