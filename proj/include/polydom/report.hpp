#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polydom {

// Machine-readable run summary. Everything except duration_ms is
// deterministic for fixed inputs and seeds.
struct RunReport {
    std::string command;
    std::string input_path;
    std::string input_digest;  // fnv1a-64 of the input bytes, hex
    std::optional<std::vector<int>> solution;  // sorted 1-based ids
    std::optional<bool> feasible;
    std::map<std::string, std::string> verdicts;
    std::map<std::string, std::string> extra;   // command-specific scalar fields
    std::optional<std::uint64_t> seed;
    double duration_ms = 0.0;

    std::string to_json() const;  // schema "report.v1", stable key order
    std::string to_text() const;
};

std::string fnv1a_hex(const std::string& bytes);

}  // namespace polydom
