#pragma once

#include <stdexcept>
#include <string>

namespace fintop {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A set family fails the topology axioms; message carries the witness.
struct NotATopology : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// Size exceeds a default cap (lift with the unsafe-large override).
struct Unsupported : Error {
    using Error::Error;
};

struct EmptySpace : Error {
    using Error::Error;
};

struct NotT0 : Error {
    using Error::Error;
};

struct InvalidExtension : Error {
    using Error::Error;
};

struct UnitNotAllowed : Error {
    using Error::Error;
};

struct EmptyWord : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line, std::size_t column)
        : Error(what + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    std::size_t line;
    std::size_t column;
};

}  // namespace fintop
