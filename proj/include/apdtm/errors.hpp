#pragma once

#include <stdexcept>
#include <string>

namespace apdtm {

/// Base class for every failure raised by the solver library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two jets disagree in interval or truncation order.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// A derivative of order m was requested from a jet of order < m.
class InsufficientOrderError : public Error {
public:
    using Error::Error;
};

/// The 2x2 boundary system has an exactly zero determinant.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// Both rows of the characteristic matrix vanish at a root, so no nullvector
/// can be read off.
class DegenerateRootError : public Error {
public:
    using Error::Error;
};

/// sin(mu) = 0: the closed-form Dirichlet solution does not exist.
class ResonanceError : public Error {
public:
    using Error::Error;
};

class NotAnEigenvalueError : public Error {
public:
    using Error::Error;
};

/// Malformed or invalid problem configuration. `key()` names the offending
/// entry (empty when the document itself is unreadable).
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

/// A config value parsed but lies outside its admissible range.
class RangeError : public ConfigError {
public:
    using ConfigError::ConfigError;
};

}  // namespace apdtm
