#ifndef CONDGEO_ERRORS_HPP
#define CONDGEO_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condgeo {

// Base of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input: bad formula text, bad model file, violated precondition
// that the caller controls. CLI exit code 3.
struct InputError : Error {
    using Error::Error;
};

// A documented size/bound guard was exceeded.
struct BoundExceededError : InputError {
    using InputError::InputError;
};

// planeGeometry refuses point sets whose convex-set family may be exponential.
struct SizeGuardError : InputError {
    using InputError::InputError;
};

// decideValiditySmall is only complete (and only offered) up to two letters.
struct TooManyLettersError : InputError {
    using InputError::InputError;
};

struct UnknownLetterError : InputError {
    explicit UnknownLetterError(const std::string& letter)
        : InputError("unknown letter: " + letter), letter(letter) {}
    std::string letter;
};

struct GroundSetMismatchError : InputError {
    using InputError::InputError;
};

// Operations that require the empty set to be convex (decompose, embed).
struct EmptySetRequiredError : InputError {
    using InputError::InputError;
};

struct PreconditionFailedError : InputError {
    using InputError::InputError;
};

// A theorem-backed internal step failed; indicates a bug, not bad input.
// CLI exit code 4.
struct InternalError : Error {
    using Error::Error;
};

// Parser diagnostics carry a byte position and the failed expectation.
struct FormulaError : InputError {
    enum class Kind { Syntax, Nesting, MixedLevel };

    FormulaError(Kind kind, std::size_t position, const std::string& message)
        : InputError(message + " (at position " + std::to_string(position) + ")"),
          kind(kind),
          position(position) {}

    Kind kind;
    std::size_t position;
};

}  // namespace condgeo

#endif
