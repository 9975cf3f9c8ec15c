#pragma once

#include <stdexcept>
#include <string>

namespace polsphere {

// Common base so callers can catch everything the library throws with one
// handler while still distinguishing categories when they need to.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arguments outside the mathematical domain of an operation (negative spin,
// |m| > S, odd 2S+2m, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// A state failed a physical-validity check (trace, hermiticity, positivity).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

// A multipole table was asked for information beyond the range it declares.
class IncompleteTableError : public Error {
public:
    explicit IncompleteTableError(const std::string& msg) : Error(msg) {}
};

// A computation would exceed the configured size budget.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A state-description document does not match the expected schema.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

// An internal cross-check failed (two routes disagreed, a quantity that must
// be nonnegative came out significantly negative, ...).
class ConsistencyError : public Error {
public:
    explicit ConsistencyError(const std::string& msg) : Error(msg) {}
};

} // namespace polsphere
