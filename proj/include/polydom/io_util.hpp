#pragma once

#include <istream>
#include <sstream>
#include <string>
#include <utility>

#include "polydom/errors.hpp"

namespace polydom {

// Reads content lines, skipping blank lines and `#` comments, tracking
// 1-based line numbers for diagnostics.
class LineReader {
  public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next content line, or ParseError naming what was expected.
    std::pair<std::string, int> next(const std::string& expectation) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            if (line.back() == '\r') line.pop_back();
            return {line, line_};
        }
        throw ParseError(line_ + 1, "unexpected end of file, expected " + expectation);
    }

    void expect_eof() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_;
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            throw ParseError(line_, "unexpected trailing content");
        }
    }

    // True when the stream has only whitespace left.
    static bool at_end(std::istringstream& ss) {
        std::string rest;
        return !(ss >> rest);
    }

    int last_line() const { return line_; }

  private:
    std::istream& in_;
    int line_ = 0;
};

}  // namespace polydom
