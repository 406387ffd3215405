#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mtk {

// Exit codes used by the command line tool.
enum class ExitCode : int {
    ok = 0,
    usage = 1,
    parse = 2,
    dimension = 3,
    cap = 4,
    inconsistency = 5,
};

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
    virtual ExitCode code() const { return ExitCode::usage; }
};

// Malformed input text. line and column are 1-based; 0 means unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
    ExitCode code() const override { return ExitCode::parse; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class DimensionError : public Error {
public:
    using Error::Error;
    ExitCode code() const override { return ExitCode::dimension; }
};

class CapError : public Error {
public:
    using Error::Error;
    ExitCode code() const override { return ExitCode::cap; }
};

// Two routes that must agree did not.
class InconsistencyError : public Error {
public:
    using Error::Error;
    ExitCode code() const override { return ExitCode::inconsistency; }
};

// A documented precondition was violated (e.g. a set that is not a basis).
class PreconditionError : public Error {
public:
    using Error::Error;
};

}  // namespace mtk
