#pragma once

#include <stdexcept>
#include <string>

namespace slicenet {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input rejected by a precondition check (bad values, unknown names, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operation not permitted in the current registry or engine state.
class StateError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure. The message always carries the offending path.
class IoError : public Error {
public:
    IoError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace slicenet
