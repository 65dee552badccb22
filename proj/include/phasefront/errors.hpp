#pragma once

#include <stdexcept>
#include <string>

namespace phasefront {

/// Base class for all library failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument, parameter set, or input file. CLI exit code 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// An iteration failed to reach its tolerance or a scheme went unstable.
/// CLI exit code 3.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// The requested construction does not exist for this model, e.g. a complex
/// scaling constant, a missing root, or an evaluation on a tie line.
/// CLI exit code 4.
class InfeasibleError : public Error {
public:
    using Error::Error;
};

} // namespace phasefront
