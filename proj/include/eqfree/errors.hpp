#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eqfree {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a word, constraint expression or instance file.
class ParseError : public Error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& what)
        : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) +
                ": " + what),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// Well-formed input that violates a semantic requirement (unknown generator,
// bad alphabet, inconsistent instance, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class AlphabetMismatchError : public Error {
public:
    using Error::Error;
};

// Word is not an element of the subgroup.
class NotMemberError : public Error {
public:
    using Error::Error;
};

// kernel_witness called on an injective map.
class InjectiveError : public Error {
public:
    using Error::Error;
};

// Operation requires an injective map.
class NotInjectiveError : public Error {
public:
    using Error::Error;
};

class NotBothNonInjectiveError : public Error {
public:
    using Error::Error;
};

class NotASolutionError : public Error {
public:
    using Error::Error;
};

class WrongShapeError : public Error {
public:
    using Error::Error;
};

class NotDecomposableError : public Error {
public:
    using Error::Error;
};

// The bounded hypothesis check of the conditional GPCP decision procedure
// found a violating word; the message carries its rendering.
class HypothesesRefutedError : public Error {
public:
    using Error::Error;
};

class BudgetExceededError : public Error {
public:
    using Error::Error;
};

class NotInImageError : public Error {
public:
    using Error::Error;
};

} // namespace eqfree
