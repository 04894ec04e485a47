#include "monocomp/majority.hpp"

#include "monocomp/errors.hpp"

namespace monocomp {

MajoritySubgraph majority_subgraph(const MultiGraph& g, const EdgeColoring& coloring, int r) {
  if (r < 1) throw config_error("majority_subgraph needs r >= 1");
  EdgeColoring check = coloring;
  check.colors = r;
  require_total(check, g);

  MajoritySubgraph maj;
  maj.edge_counts.assign(r, 0);
  for (int c : coloring.color) ++maj.edge_counts[c - 1];
  maj.color = 1;
  for (int c = 2; c <= r; ++c) {
    if (maj.edge_counts[c - 1] > maj.edge_counts[maj.color - 1]) maj.color = c;
  }
  maj.sub = induced_subgraph(g, [&](int e) { return coloring.color[e] == maj.color; });
  return maj;
}

}  // namespace monocomp
