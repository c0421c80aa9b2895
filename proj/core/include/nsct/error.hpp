#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nsct {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
public:
    using Error::Error;
};

class NotABijection : public Error {
public:
    using Error::Error;
};

class GroupTooLarge : public Error {
public:
    using Error::Error;
};

class NotPrime : public Error {
public:
    using Error::Error;
};

class NotASubgroup : public Error {
public:
    using Error::Error;
};

class NotNormal : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class ConductorMismatch : public Error {
public:
    using Error::Error;
};

class NotCoprime : public Error {
public:
    using Error::Error;
};

class NotRational : public Error {
public:
    using Error::Error;
};

/// Malformed textual input. `offset()` is a byte offset into the parsed
/// text; `expected()` lists what the parser would have accepted there.
class ParseError : public Error {
public:
    ParseError(std::string message, std::size_t offset,
               std::vector<std::string> expected = {})
        : Error(std::move(message)), offset_(offset), expected_(std::move(expected)) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// A supplied character table breaks one of its invariants.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// An internal self-check failed. Always a bug in this library.
class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

/// Two independent evaluation routes of a supercharacter theory disagree.
class ConsistencyFailure : public Error {
public:
    using Error::Error;
};

}  // namespace nsct
