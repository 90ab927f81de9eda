#pragma once

#include <stdexcept>
#include <string>

namespace fourfold {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid, duplicate, or undeclared mode labels.
class ModeError : public Error {
public:
    using Error::Error;
};

// Normalization or phase fixing requested on a (near-)zero state.
class ZeroStateError : public Error {
public:
    using Error::Error;
};

// Coincidence projection removed every term.
class EmptyPostselectionError : public Error {
public:
    using Error::Error;
};

// Correlation tensor with vanishing coefficient sum.
class DegenerateTensorError : public Error {
public:
    using Error::Error;
};

// Syntax error in a circuit file; carries the offending position.
class CircuitParseError : public Error {
public:
    CircuitParseError(const std::string& message, int line, int column)
        : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

} // namespace fourfold
