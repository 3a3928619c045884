#ifndef INVKIT_ERRORS_HPP
#define INVKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace invkit {

/// Base class for all invkit errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class FieldMismatchError : public Error {
public:
    explicit FieldMismatchError(const std::string& msg) : Error(msg) {}
};

class DivisionByZeroError : public Error {
public:
    explicit DivisionByZeroError(const std::string& msg) : Error(msg) {}
};

/// Bad sizes, bad indices, kind violations, unsupported field requests.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

/// Syntax errors in expressions or input files; `position` is a byte offset
/// into the offending text (or npos when not applicable).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position = std::string::npos)
        : Error(msg), position(position) {}
    std::size_t position;
};

/// A graded component exceeded the configured monomial cap.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& msg) : Error(msg) {}
};

} // namespace invkit

#endif
