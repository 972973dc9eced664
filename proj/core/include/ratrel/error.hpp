#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratrel {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A lasso with an empty period, or letters outside its alphabet.
class MalformedWord : public Error {
public:
    using Error::Error;
};

/// 1-based index out of range (index 0).
class IndexError : public Error {
public:
    using Error::Error;
};

/// A word or label uses a letter the consuming machine does not know.
class AlphabetMismatch : public Error {
public:
    using Error::Error;
};

/// Structural violation in an automaton, transducer or tree.
class MalformedStructure : public Error {
public:
    using Error::Error;
};

/// A request would materialize more data than the configured limits allow.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Text-format error; line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& message)
        : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace ratrel
