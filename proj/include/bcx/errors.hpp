#pragma once

#include <stdexcept>
#include <string>

namespace bcx {

// Base of all library errors. `kind()` is a stable machine-readable tag
// (e.g. "NotPositive") used by the CLI for diagnostics and exit codes.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

// A mathematically false condition (singular matrix, non-positive input, ...).
// The CLI maps these to exit code 1.
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed or inconsistent input (bad JSON, shape mismatch, ...).
// The CLI maps these to exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

class ShapeMismatch : public InputError {
public:
    explicit ShapeMismatch(const std::string& what) : InputError("ShapeMismatch", what) {}
};

class NotSquare : public InputError {
public:
    explicit NotSquare(const std::string& what) : InputError("NotSquare", what) {}
};

class BadFactorization : public InputError {
public:
    explicit BadFactorization(const std::string& what) : InputError("BadFactorization", what) {}
};

class ParseError : public InputError {
public:
    explicit ParseError(const std::string& what) : InputError("ParseError", what) {}
};

class IOError : public InputError {
public:
    explicit IOError(const std::string& what) : InputError("IOError", what) {}
};

class ZeroDivisor : public DomainError {
public:
    explicit ZeroDivisor(const std::string& what) : DomainError("ZeroDivisor", what) {}
};

class Singular : public DomainError {
public:
    explicit Singular(const std::string& what) : DomainError("Singular", what) {}
};

class NotPositive : public DomainError {
public:
    explicit NotPositive(const std::string& what) : DomainError("NotPositive", what) {}
};

class NotProduct : public DomainError {
public:
    explicit NotProduct(const std::string& what) : DomainError("NotProduct", what) {}
};

class ZeroTrace : public DomainError {
public:
    explicit ZeroTrace(const std::string& what) : DomainError("ZeroTrace", what) {}
};

class NotCP : public DomainError {
public:
    explicit NotCP(const std::string& what) : DomainError("NotCP", what) {}
};

} // namespace bcx
