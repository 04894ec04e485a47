#pragma once

#include <vector>

#include "monocomp/edge_coloring.hpp"
#include "monocomp/multigraph.hpp"

namespace monocomp {

struct ColorStats {
  int max_component = 0;  // largest component order in this color class
  int component_count = 0;
};

struct MonoStats {
  std::vector<ColorStats> per_color;  // index c-1 holds color c
  int max_component = 0;
  double max_fraction = 0.0;  // max_component / n
  int argmax_color = 0;       // smallest color attaining the max
};

// Component statistics of each color class. Requires a coloring that is
// total for g with colors in {1..r}; throws contract_violation otherwise.
// Isolated vertices count as singleton components in every color class.
MonoStats mono_stats(const MultiGraph& g, const EdgeColoring& coloring, int r);

}  // namespace monocomp
