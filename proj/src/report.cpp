#include "polydom/report.hpp"

#include <json.hpp>
#include <sstream>

namespace polydom {

std::string fnv1a_hex(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "report.v1";
    j["command"] = command;
    j["input"] = {{"path", input_path}, {"digest", input_digest}};
    if (feasible) j["feasible"] = *feasible;
    if (solution) {
        j["solution"] = {{"ids", *solution}, {"size", solution->size()}};
    }
    if (!verdicts.empty()) j["verdicts"] = verdicts;
    for (const auto& [k, v] : extra) j[k] = v;
    if (seed) j["seed"] = *seed;
    j["duration_ms"] = duration_ms;
    return j.dump(2) + "\n";
}

std::string RunReport::to_text() const {
    std::ostringstream out;
    out << "command: " << command << '\n';
    if (!input_path.empty()) out << "input: " << input_path << " (digest " << input_digest << ")\n";
    if (feasible) out << "feasible: " << (*feasible ? "true" : "false") << '\n';
    if (solution) {
        out << "size: " << solution->size() << '\n' << "ids:";
        for (int id : *solution) out << ' ' << id;
        out << '\n';
    }
    for (const auto& [k, v] : verdicts) out << "verdict " << k << ": " << v << '\n';
    for (const auto& [k, v] : extra) out << k << ": " << v << '\n';
    if (seed) out << "seed: " << *seed << '\n';
    out << "duration_ms: " << duration_ms << '\n';
    return out.str();
}

}  // namespace polydom
