#pragma once

#include <stdexcept>
#include <string>

namespace binmeas {

/// Bad arguments at an API or CLI boundary (unknown law name, bad parameters).
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// A stated precondition of an operation does not hold (wrong law pair,
/// non-additive input, empty family, ...).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A value lies outside the declared domain of a measure or operation.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Structural mismatch between operands (different universes, dimensions).
struct StructureError : std::runtime_error {
    explicit StructureError(const std::string& what) : std::runtime_error(what) {}
};

/// Text-format syntax or semantic error; carries a position when known.
struct ParseError : std::runtime_error {
    int line = -1;
    int column = -1;
    ParseError(const std::string& what, int line_, int column_)
        : std::runtime_error(what), line(line_), column(column_) {}
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace binmeas
