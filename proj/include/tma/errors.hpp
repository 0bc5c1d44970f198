#pragma once

#include <stdexcept>
#include <string>

namespace tma {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid scenario/config input (bad field values, unknown keys, bad flags).
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Structurally inconsistent data (length mismatches, misaligned time grids).
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Time outside the valid evaluation window (extrapolation not enabled).
class TimeDomainError : public Error {
public:
    using Error::Error;
};

/// Observer and target (or predicted target) coincide; bearing undefined.
class DegenerateGeometryError : public Error {
public:
    using Error::Error;
};

/// Fewer observations than the fit requires.
class InsufficientDataError : public Error {
public:
    using Error::Error;
};

/// Design matrix rank-deficient or condition number above the limit.
/// Typically a non-maneuvering observer against a uniform-linear target.
class UnobservableGeometryError : public Error {
public:
    UnobservableGeometryError(const std::string& msg, double condition_number)
        : Error(msg), condition_number(condition_number) {}
    double condition_number;
};

/// Filesystem failures surfaced at the CLI boundary.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tma
