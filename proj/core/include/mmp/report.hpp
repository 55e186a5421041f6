#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace mmp {

inline constexpr const char* kToolName = "mmp";
inline constexpr const char* kToolVersion = "0.1.0";

// Byte-deterministic command output: header (tool version + input digest),
// command-specific body lines, and an exact-fraction summary footer.
struct Report {
    std::string command;
    std::string input_digest;  // fnv1a-64 hex of the input text; "-" if none
    std::vector<std::string> body;
    std::string summary;
};

std::string fnv1a_hex(std::string_view bytes);
std::string render_text(const Report& report);
std::string render_json(const Report& report);

}  // namespace mmp
