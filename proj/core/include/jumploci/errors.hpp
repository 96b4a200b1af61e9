#pragma once

#include <stdexcept>
#include <string>

namespace jumploci {

// Malformed input: bad rationals, schema violations, dimension mismatches.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Structurally invalid mathematical input (mixed rings, non-complex, non-local algebra).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Operands exceed the hard caps on combinatorial operations (minor enumeration).
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace jumploci
