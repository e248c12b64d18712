#pragma once

#include <stdexcept>
#include <string>

namespace teich {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |trace| <= 2 + tol: no closed geodesic, no axis.
struct NotHyperbolicError : Error {
    using Error::Error;
};

// Fenchel-Nielsen data that does not produce a hyperbolic structure
// (nonpositive lengths, parabolic boundary word, ...).
struct DegenerateStructureError : Error {
    using Error::Error;
};

struct IndexOutOfRangeError : Error {
    using Error::Error;
};

struct SurfaceMismatchError : Error {
    using Error::Error;
};

struct NonpositiveLengthError : Error {
    using Error::Error;
};

struct NonpositiveModulusError : Error {
    using Error::Error;
};

struct BadEulerError : Error {
    using Error::Error;
};

struct EmptySampleError : Error {
    using Error::Error;
};

struct EmptyInputError : Error {
    using Error::Error;
};

// Malformed labels, invalid budgets, bad config values.
struct InvalidArgumentError : Error {
    using Error::Error;
};

} // namespace teich
