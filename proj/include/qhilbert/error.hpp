#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qhilbert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (empty input, out of range, bad length).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Text input (CSV or JSON) could not be parsed. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A steganographic frame failed phase classification.
class DecodeError : public Error {
public:
    enum class Kind { FrameCorrupted, UndecodablePhase };

    DecodeError(Kind kind, const std::string& detail)
        : Error(std::string(name(kind)) + ": " + detail), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

    static const char* name(Kind kind) noexcept {
        return kind == Kind::FrameCorrupted ? "frame corrupted" : "undecodable phase";
    }

private:
    Kind kind_;
};

}  // namespace qhilbert
