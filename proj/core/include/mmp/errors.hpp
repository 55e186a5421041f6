#pragma once

#include <stdexcept>
#include <string>

namespace mmp {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: a precondition or a stored invariant would be violated.
// The CLI maps these to exit status 1.
struct ValidationError : Error {
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// A proved property failed at runtime (e.g. a termination measure did not
// decrease).  Never downgraded to a warning; the CLI maps these to exit
// status 2.
struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

}  // namespace mmp
