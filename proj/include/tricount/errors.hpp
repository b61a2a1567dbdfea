#pragma once

#include <stdexcept>
#include <string>

namespace tricount {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInput : Error {
    using Error::Error;
};

struct CapacityExceeded : Error {
    using Error::Error;
};

struct NoTriangulation : Error {
    using Error::Error;
};

struct DegenerateTriangle : Error {
    using Error::Error;
};

struct UndefinedBase : Error {
    using Error::Error;
};

// An invariant promised by the library failed; always a bug, never user error.
struct InternalError : Error {
    using Error::Error;
};

} // namespace tricount
