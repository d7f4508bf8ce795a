#pragma once

#include <stdexcept>
#include <string>

namespace polylight {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raw input failed polygon validation (non-simple, collinear triple, ...).
struct ValidationError : Error {
    using Error::Error;
};

// An operation received an argument outside its contract
// (zero direction, degenerate segment, vertex that is not reflex, ...).
struct DegenerateInput : Error {
    using Error::Error;
};

// A light source violates the general-position requirement
// (it lies on a line spanned by two polygon vertices).
struct SourceOnCriticalLine : Error {
    using Error::Error;
};

struct SourceOutside : Error {
    using Error::Error;
};

// An iteration cap was reached before the goal (depth search, path search).
struct CapExceeded : Error {
    using Error::Error;
};

struct EmptyKernel : Error {
    using Error::Error;
};

}  // namespace polylight
