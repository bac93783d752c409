#pragma once

#include <stdexcept>
#include <string>

namespace hauptmod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Inverting (or raising to a negative power) the zero series.
class ZeroSeries : public Error {
public:
    ZeroSeries() : Error("operation requires a nonzero series") {}
};

/// A coefficient was requested at or beyond the truncation bound.
class PrecisionExceeded : public Error {
public:
    using Error::Error;
};

class CuspNotReduced : public Error {
public:
    using Error::Error;
};

class NotModular : public Error {
public:
    using Error::Error;
};

class NotPrimeLevel : public Error {
public:
    using Error::Error;
};

class LevelNotCoprimeTo6 : public Error {
public:
    using Error::Error;
};

/// Malformed user input: a non-divisor eta index, an unparsable quotient, ...
class BadSpec : public Error {
public:
    using Error::Error;
};

/// Base for failures of the modular-equation solver. `diagnostics` is a
/// human-readable account of the degrees, precision and nullity observed.
class SolverError : public Error {
public:
    SolverError(const std::string& what, std::string diagnostics)
        : Error(what + ": " + diagnostics), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

class NullspaceEmpty : public SolverError {
public:
    explicit NullspaceEmpty(std::string diagnostics)
        : SolverError("nullspace is empty", std::move(diagnostics)) {}
};

class NullspaceAmbiguous : public SolverError {
public:
    explicit NullspaceAmbiguous(std::string diagnostics)
        : SolverError("nullspace has dimension > 1", std::move(diagnostics)) {}
};

class CacheCorrupt : public Error {
public:
    using Error::Error;
};

}  // namespace hauptmod
