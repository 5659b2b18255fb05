#pragma once

#include <stdexcept>
#include <string>

namespace migraph {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Graph construction and lookup.
struct InvalidId : Error {
    using Error::Error;
};
struct DuplicateId : Error {
    using Error::Error;
};
struct UnknownEndpoint : Error {
    using Error::Error;
};
struct SelfLoop : Error {
    using Error::Error;
};
struct DuplicateEdge : Error {
    using Error::Error;
};
struct UnknownComponent : Error {
    using Error::Error;
};

// Combinatorics and estimates.
struct BoundExceeded : Error {
    using Error::Error;
};
struct InvalidPartition : Error {
    using Error::Error;
};
struct TooManyBlocks : Error {
    using Error::Error;
};
struct OutOfRange : Error {
    using Error::Error;
};
struct NoConvergence : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};

// Serialization.
struct SyntaxError : Error {
    using Error::Error;
};
struct SchemaError : Error {
    using Error::Error;
};

}  // namespace migraph
