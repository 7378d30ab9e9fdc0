#pragma once

#include <stdexcept>
#include <string>

namespace polydom {

// Malformed input file; line is 1-based.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// A ChordModel invariant does not hold.
struct ModelError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operation not applicable to this input (e.g. oracle cap exceeded).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace polydom
