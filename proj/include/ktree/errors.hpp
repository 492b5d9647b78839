#pragma once

#include <stdexcept>
#include <string>

namespace ktree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (k-spec grammar, numeric literals).
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed input whose value violates an operation's precondition.
struct InvalidParams : Error {
    using Error::Error;
};

/// An Approx value's interval straddles a floor/ceil boundary; the stored
/// digits do not determine the answer.
struct PrecisionExhausted : Error {
    using Error::Error;
};

/// Operation requires an exact (rational or quadratic) k.
struct UnsupportedRepresentation : Error {
    using Error::Error;
};

/// A closed form that must produce a rational integer did not.
struct NonIntegerResult : Error {
    using Error::Error;
};

/// Enumeration exceeded the configured node cap.
struct SizeLimit : Error {
    using Error::Error;
};

/// Requested the ⌈k⌉-th child at an indicator where only ⌊k⌋ children exist.
struct ChildAbsent : Error {
    using Error::Error;
};

}  // namespace ktree
