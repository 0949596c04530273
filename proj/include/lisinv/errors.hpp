#pragma once

#include <stdexcept>
#include <string>

namespace lisinv {

/// Requested size exceeds what exhaustive enumeration supports.
struct LimitError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Moments requested over a class with no members.
struct EmptyClassError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Series division by an element without a unit constant term.
struct NonUnitDivisor : std::domain_error {
    using std::domain_error::domain_error;
};

/// Square root of a series whose constant term is not 1.
struct BranchError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Coefficient requested beyond the truncation order.
struct TruncationExceeded : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// A generating function construction violated one of its own invariants.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

/// Lookup of a generating function, constant or command that does not exist.
struct UnknownName : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

}  // namespace lisinv
