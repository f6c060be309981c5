#pragma once

#include <stdexcept>
#include <string>

namespace tfilter {

/// Base for every error the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameter or precondition violated by the caller.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Two planes, frames or tables whose shapes do not fit together.
class GeometryError : public Error {
public:
    using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// File contents do not follow the expected layout.
class FormatError : public Error {
public:
    using Error::Error;
};

}  // namespace tfilter
