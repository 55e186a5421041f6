#pragma once

#include <string>

#include "mmp/cyclic_quotient.hpp"

namespace mmp {

// Dual graph of a resolution chain as DOT text: one node per exceptional
// curve, labeled "F_j (-b_j)" with the discrepancy as an attribute, one edge
// per adjacent pair.  Node order is deterministic.  An empty chain yields an
// empty graph with a comment line.
std::string emit_dot(const ResolutionChain& chain);

}  // namespace mmp
