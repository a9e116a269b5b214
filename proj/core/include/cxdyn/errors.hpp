#ifndef CXDYN_ERRORS_HPP
#define CXDYN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cxdyn {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid value fed to a constructor or operation (wrong sizes, non-finite
// entries, mismatched underlying spaces, out-of-range points, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Arrow composition attempted on a non-composable pair.
class ComposabilityError : public Error {
public:
    using Error::Error;
};

// A family of cozero sets that is not a partition of the required support.
class PartitionError : public Error {
public:
    using Error::Error;
};

// Radon-Nikodym input measures that do not share a measure class.
class AbsoluteContinuityError : public Error {
public:
    using Error::Error;
};

// Blow-up requested at a point whose balls carry no mass at the final scale.
class DegenerateCenterError : public Error {
public:
    using Error::Error;
};

// An operation whose stated precondition does not hold (non-invariant measure
// passed to the ergodic machinery, non-bijective map where cycles are needed).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent experiment configuration.
class ConfigError : public Error {
public:
    using Error::Error;
};

} // namespace cxdyn

#endif
