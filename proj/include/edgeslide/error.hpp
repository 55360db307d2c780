#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace edgeslide {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed `.elist`, `.moves` or bijection document.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

/// An operation was called outside its stated domain.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A move's applicability predicate failed during replay.
class RejectedMove : public Error {
public:
    RejectedMove(std::size_t index, std::string predicate)
        : Error("move " + std::to_string(index) + " rejected: " + predicate),
          index_(index),
          predicate_(std::move(predicate)) {}

    std::size_t index() const noexcept { return index_; }
    const std::string& predicate() const noexcept { return predicate_; }

private:
    std::size_t index_;
    std::string predicate_;
};

/// A property the constructions rely on did not hold at runtime.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

}  // namespace edgeslide
