#pragma once

#include <stdexcept>
#include <string>

namespace biwave {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Parameter outside its admissible range (non-finite c, c <= 0, bad selector, ...).
struct InvalidParameter : Error {
    using Error::Error;
};

// c too close to 1; the algebra constants and the synthesis coefficient degenerate there.
struct DegenerateParameter : Error {
    using Error::Error;
};

// Operation called with params of the other regime.
struct WrongRegime : Error {
    using Error::Error;
};

// Zero element of B_c passed to the inversion routine.
struct NotInvertible : Error {
    using Error::Error;
};

// Grid has too few points for the requested stencil.
struct GridTooSmall : Error {
    using Error::Error;
};

// Polynomial degree would exceed the supported cap.
struct DegreeOverflow : Error {
    using Error::Error;
};

// Malformed run configuration; message carries the offending field path.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace biwave
