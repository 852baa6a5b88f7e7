#pragma once

#include <stdexcept>
#include <string>

namespace sft {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two values over different alphabets were combined.
struct AlphabetMismatchError : Error {
    using Error::Error;
};

/// An SFT presentation collapsed to the empty shift space.
struct EmptyShiftError : Error {
    using Error::Error;
};

/// Operation requires a topologically mixing SFT.
struct NotMixingError : Error {
    using Error::Error;
};

/// Operation requires a transitive (strongly connected) SFT.
struct NotTransitiveError : Error {
    using Error::Error;
};

/// The pq generator requires relatively prime loop lengths.
struct PQNotCoprimeError : Error {
    using Error::Error;
};

/// Finite shadowing rejects pseudo-orbits with step error above 2^-1.
struct DeltaTooLargeError : Error {
    using Error::Error;
};

/// Specification shadowing rejects under-spaced specifications.
struct SpacingTooSmallError : Error {
    using Error::Error;
};

/// Average diagnostics need more points than the requested horizon.
struct HorizonTooLongError : Error {
    using Error::Error;
};

/// Malformed textual input (files, point grammar, dyadic literals).
struct ParseError : Error {
    using Error::Error;
};

/// A documented precondition does not hold (e.g. non-essential SFT).
struct PreconditionError : Error {
    using Error::Error;
};

} // namespace sft
