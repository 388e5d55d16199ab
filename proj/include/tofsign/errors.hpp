#pragma once

#include <stdexcept>

namespace tofsign {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input data: PGM streams, manifests, CSV files, SiGML documents.
class ParseError : public Error {
public:
    using Error::Error;
};

// Filesystem-level failure: missing file, unwritable output.
class IoError : public Error {
public:
    using Error::Error;
};

// A precondition on arguments or parameters was violated.
class InvalidParams : public Error {
public:
    using Error::Error;
};

// Centroid requested for a frame with zero total intensity.
class EmptyFrameError : public Error {
public:
    using Error::Error;
};

}  // namespace tofsign
