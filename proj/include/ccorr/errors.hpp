// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace ccorr {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A value violates a type invariant (non-positive bandwidth, NaN sample, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two inputs that must agree in length or dimension do not.
class SizeMismatchError : public Error {
public:
    using Error::Error;
};

/// All inputs are zero, so the weight cannot be identified.
class UnidentifiableError : public Error {
public:
    using Error::Error;
};

/// Every kernel weight underflowed to zero during a batch fixed-point step.
class KernelCollapseError : public Error {
public:
    using Error::Error;
};

/// Integration box too small or grid not converged.
class QuadratureError : public Error {
public:
    using Error::Error;
};

/// Malformed configuration; the message names the offending field.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Output could not be written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ccorr
