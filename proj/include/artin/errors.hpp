#pragma once

#include <stdexcept>
#include <string>

namespace artin {

// Base for every error thrown by the library. CLI maps these to exit code 1;
// anything else escaping is a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Arithmetic on cyclotomic values of different orders without an explicit lift.
class OrderMismatchError : public Error {
public:
    using Error::Error;
};

class DivisionByZeroError : public Error {
public:
    using Error::Error;
};

// Closure cap exceeded, non-closed member set, subgroup/group mismatches.
class GroupError : public Error {
public:
    using Error::Error;
};

// A class function that fails an integrality or nonnegativity check that
// characters must satisfy.
class NotACharacterError : public Error {
public:
    using Error::Error;
};

class RamifiedPrimeError : public Error {
public:
    using Error::Error;
};

// Observed factorization pattern has no matching conjugacy class.
class InconsistentGaloisError : public Error {
public:
    using Error::Error;
};

// Character distinguishes conjugacy classes that share a cycle type, so it
// cannot be evaluated from factorization data alone.
class UnobservableCharacterError : public Error {
public:
    using Error::Error;
};

// Bad evaluation point, limit above the configured cap, rank defects, ...
class DomainError : public Error {
public:
    using Error::Error;
};

} // namespace artin
