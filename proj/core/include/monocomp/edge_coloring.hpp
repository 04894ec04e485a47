#pragma once

#include <string>
#include <vector>

#include "monocomp/multigraph.hpp"

namespace monocomp {

// Total assignment of colors {1..colors} to edge-ids.
struct EdgeColoring {
  int colors = 0;
  std::vector<int> color;  // edge-id -> color

  bool total_for(const MultiGraph& g) const;
};

// Throws contract_violation unless the coloring covers every edge of g with
// a color in {1..colors}.
void require_total(const EdgeColoring& c, const MultiGraph& g);

// Text format: one color per line, in edge-id order.
std::string write_coloring(const EdgeColoring& c);
EdgeColoring read_coloring(const std::string& text);

}  // namespace monocomp
