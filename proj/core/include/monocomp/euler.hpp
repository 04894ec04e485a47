#pragma once

#include <cstdint>
#include <vector>

#include "monocomp/multigraph.hpp"

namespace monocomp {

struct Orientation {
  // reversed[e] == 1 means edge e is oriented v -> u instead of u -> v.
  std::vector<std::uint8_t> reversed;
};

// Orients every edge along an Euler circuit of its component, so each vertex
// ends up with in-degree exactly degree/2. Requires every degree even;
// throws config_error otherwise. Loops orient forward and add 1 to both
// in- and out-degree.
Orientation euler_orient(const MultiGraph& g);

std::vector<int> in_degrees(const MultiGraph& g, const Orientation& o);

}  // namespace monocomp
