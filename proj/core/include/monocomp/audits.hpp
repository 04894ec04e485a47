#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monocomp/edge_coloring.hpp"
#include "monocomp/hamilton.hpp"

namespace monocomp {

struct PathAudit {
  std::vector<int> max_per_color;  // indexed by color; entries < 2 unused
  int max_len = 0;                 // longest run over all colors >= 2
  std::int64_t threshold = 0;      // floor(n^threshold_exponent)
  int violations = 0;              // runs longer than threshold
};

// For each color i >= 2, the edges of cycle i that kept color i form
// disjoint paths along that cycle; reports the longest such path per color.
// Throws contract_violation if some cycle kept its color on every edge
// (the class would be a cycle, not paths). Uses the cycle-sum edge-id
// layout (edge i*n + j lies on cycle i).
PathAudit path_length_audit(const HamiltonDecomposition& decomp, const EdgeColoring& coloring,
                            double threshold_exponent = 0.4);

struct ArboStats {
  int component_count = 0;
  int max_order = 0;       // largest component order
  int max_height = 0;      // longest arc-path toward a root
  int unicyclic_count = 0; // components with #arcs == #vertices
};

// Statistics of an arc set in which every vertex has out-degree <= 1: such a
// set decomposes into in-arborescences and unicyclic components. Vertices
// not touching any arc are ignored. For a unicyclic component, height is
// measured after removing the out-arc of its smallest on-cycle vertex.
ArboStats arborescence_stats(int n, const std::vector<std::pair<int, int>>& arcs);

}  // namespace monocomp
