#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace boolsolve {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// condition: 1 = capture, 2 = unknown occurs in substituent, 0 = length mismatch
class NotSubstitutible : public Error {
public:
    NotSubstitutible(const std::string& message, int condition, std::size_t index)
        : Error(message), condition_(condition), index_(index) {}

    int condition() const { return condition_; }
    std::size_t index() const { return index_; }

private:
    int condition_;
    std::size_t index_;
};

class UnboundAtom : public Error {
public:
    explicit UnboundAtom(const std::string& atom)
        : Error("atom '" + atom + "' has no value in the valuation"), atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

class NoSolution : public Error {
public:
    using Error::Error;
};

class NotSolvable : public Error {
public:
    using Error::Error;
};

class MissingParameters : public Error {
public:
    using Error::Error;
};

class NotAParticularSolution : public Error {
public:
    using Error::Error;
};

class InternalCheckFailed : public Error {
public:
    using Error::Error;
};

class ProjectionFailed : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class InvalidProblem : public Error {
public:
    using Error::Error;
};

}  // namespace boolsolve
