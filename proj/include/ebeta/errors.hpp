#pragma once

#include <stdexcept>
#include <string>

namespace ebeta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A base below 3; everything in this library assumes β ≥ 3.
struct ValueBelowThree : Error {
    using Error::Error;
};

/// Degenerate candidate map (zero contraction ratio).
struct InvalidMu : Error {
    using Error::Error;
};

/// Prefix handed to the multi-coding sampler violates its constraints.
struct InvalidPrefix : Error {
    using Error::Error;
};

/// Sign conditions for the cubic root bracket failed.
struct NoRootInBracket : Error {
    using Error::Error;
};

/// Malformed rational / word / coding text.
struct ParseError : Error {
    using Error::Error;
};

/// An internal consistency check that should hold by construction failed.
struct AssertionFailure : Error {
    using Error::Error;
};

}  // namespace ebeta
