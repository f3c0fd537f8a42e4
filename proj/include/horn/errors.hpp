#pragma once

#include <stdexcept>
#include <string>

namespace horn {

// Base class for all errors raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed rule text or graph text; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A precondition on an operation's input was violated (non-definite input to
// a definite-only algorithm, unknown family name, set that is not a cover, ...).
class InputError : public Error {
public:
    using Error::Error;
};

// A guarded exhaustive procedure was asked to run beyond its size limit.
class LimitError : public Error {
public:
    using Error::Error;
};

}  // namespace horn
