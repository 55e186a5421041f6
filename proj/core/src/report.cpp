#include "mmp/report.hpp"

#include <json.hpp>

namespace mmp {

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[static_cast<std::size_t>(i)] = digits[h & 0xf];
        h >>= 4;
    }
    return out;
}

std::string render_text(const Report& r) {
    std::string out;
    out += std::string("# ") + kToolName + " " + kToolVersion + "\n";
    out += "# input: fnv1a=" + r.input_digest + "\n";
    out += "# command: " + r.command + "\n";
    for (const auto& line : r.body) {
        out += line;
        out += "\n";
    }
    out += "# summary: " + r.summary + "\n";
    return out;
}

std::string render_json(const Report& r) {
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["input_digest"] = r.input_digest;
    j["command"] = r.command;
    j["body"] = r.body;
    j["summary"] = r.summary;
    return j.dump(2) + "\n";
}

}  // namespace mmp
