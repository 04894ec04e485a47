#pragma once

#include <cstdint>
#include <vector>

#include "monocomp/edge_coloring.hpp"
#include "monocomp/multigraph.hpp"

namespace monocomp {

struct MajoritySubgraph {
  Subgraph sub;
  int color = 0;                         // smallest color with the most edges
  std::vector<std::int64_t> edge_counts; // index c-1 holds color c
};

// The subgraph spanned by the most frequent color class; by pigeonhole it
// has at least ceil(m / r) edges.
MajoritySubgraph majority_subgraph(const MultiGraph& g, const EdgeColoring& coloring, int r);

}  // namespace monocomp
