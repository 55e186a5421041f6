#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mmp/flip_engine.hpp"
#include "mmp/terminal_point.hpp"

namespace mmp {

// Batch input: flat key=value text with bracketed tuple lists, e.g.
//   kind=quotient n=18 q=5
//   kind=terminal_point r=5 a=2 g=[(0,2),(1,1),(2,0)]
//   kind=curve_config case=3 points=[(9,5,1),(4,1,1)]
//   kind=curve_config case=2 boundary=(3,2,1) points=[(18,5,1)]
//   kind=curve_config case=1 index=(5,2)
//   kind=flip_state points=[(5,2,3),(3,1,1)] seed=7
// Unknown keys are rejected (strict mode); parse errors carry a position.

struct ParseError : ValidationError {
    ParseError(int line, int col, const std::string& what)
        : ValidationError("parse error at " + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + what),
          line(line),
          col(col) {}
    int line;
    int col;
};

struct QuotientInstance {
    Int n, q;
    friend bool operator==(const QuotientInstance&, const QuotientInstance&) = default;
};

struct TerminalPointInstance {
    Int r, a;
    std::vector<std::pair<long, long>> terms;  // (k, val), sorted by k
    friend bool operator==(const TerminalPointInstance&, const TerminalPointInstance&) = default;
};

struct CurveConfigInstance {
    int case_no = 0;
    std::vector<std::array<Int, 3>> points;    // (n, q, meet)
    std::optional<std::array<Int, 3>> boundary;
    std::optional<std::array<Int, 2>> index;   // case 1: (r, a)
    friend bool operator==(const CurveConfigInstance&, const CurveConfigInstance&) = default;
};

struct FlipStateInstance {
    std::vector<std::array<Int, 3>> points;  // (r, a, n)
    std::uint64_t seed = 0;
    friend bool operator==(const FlipStateInstance&, const FlipStateInstance&) = default;
};

using InstanceData =
    std::variant<QuotientInstance, TerminalPointInstance, CurveConfigInstance,
                 FlipStateInstance>;

InstanceData parse_instance(std::string_view text);
std::string serialize_instance(const InstanceData& inst);  // canonical form

// Domain-object builders (validate on construction).
CyclicQuotientType to_quotient(const QuotientInstance&);
TerminalPoint to_terminal_point(const TerminalPointInstance&);
CurveConfig to_curve_config(const CurveConfigInstance&);
FlipState to_flip_state(const FlipStateInstance&, std::optional<std::uint64_t> seed_override);
FlipState to_flip_state(const CurveConfigInstance&, std::uint64_t seed);

}  // namespace mmp
