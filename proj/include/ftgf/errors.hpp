#pragma once

#include <stdexcept>
#include <string>

namespace ftgf {

/// Base type for all errors thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Errors caused by invalid caller input (bad parameters, malformed data);
/// the CLI maps these to usage-error exit codes.
class InputError : public Error {
public:
    using Error::Error;
};

/// The supplied polynomial factors over GF(2).
class ReduciblePolynomial : public InputError {
public:
    using InputError::InputError;
};

/// A polynomial degree does not match what the operation requires.
class DegreeMismatch : public InputError {
public:
    using InputError::InputError;
};

/// Two field elements belong to different field contexts.
class ContextMismatch : public Error {
public:
    using Error::Error;
};

/// Multiplicative inverse (or discrete log) of zero requested.
class ZeroInverse : public Error {
public:
    using Error::Error;
};

/// A bit vector has the wrong length for the operation.
class LengthMismatch : public InputError {
public:
    using InputError::InputError;
};

/// No code with the requested parameters exists within supported limits.
class UnsatisfiableParams : public InputError {
public:
    using InputError::InputError;
};

/// Netlist input width does not match the primary input count.
class WidthMismatch : public InputError {
public:
    using InputError::InputError;
};

/// A fault or output references a gate id that does not exist.
class UnknownGate : public InputError {
public:
    using InputError::InputError;
};

/// Malformed configuration, serialized object, or argument value.
class ConfigInvalid : public InputError {
public:
    using InputError::InputError;
};

}  // namespace ftgf
