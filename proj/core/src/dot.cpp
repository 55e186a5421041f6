#include "mmp/dot.hpp"

namespace mmp {

std::string emit_dot(const ResolutionChain& chain) {
    std::string out = "digraph dual_graph {\n";
    const auto& b = chain.self_intersections.entries();
    if (b.empty()) {
        out += "  // smooth germ: no exceptional curves\n";
        return out + "}\n";
    }
    out += "  rankdir=LR;\n  node [shape=circle];\n";
    for (std::size_t j = 0; j < b.size(); ++j) {
        std::string name = "F" + std::to_string(j + 1);
        out += "  " + name + " [label=\"" + name + " (-" + b[j].str() +
               ")\", discrepancy=\"" + chain.discrepancies[j].str() + "\"];\n";
    }
    for (std::size_t j = 0; j + 1 < b.size(); ++j)
        out += "  F" + std::to_string(j + 1) + " -> F" + std::to_string(j + 2) +
               " [dir=none];\n";
    return out + "}\n";
}

}  // namespace mmp
