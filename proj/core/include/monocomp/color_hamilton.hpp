#pragma once

#include <vector>

#include "monocomp/block_partition.hpp"
#include "monocomp/edge_coloring.hpp"
#include "monocomp/hamilton.hpp"

namespace monocomp {

struct HamiltonColoringParams {
  double block_exponent = 0.7;  // blocks of ~n^0.7 consecutive first-cycle vertices
};

struct HamiltonColoring {
  EdgeColoring coloring;   // r colors, indexed by the cycle-sum edge-id layout
  BlockPartition blocks;   // consecutive runs along the first cycle
  std::vector<int> estar;  // first-cycle edge-ids recolored 2 (block boundaries)
};

// Colors the edge set of a sum of r >= 2 spanning cycles: edges inside a
// block get color 1, block-boundary edges of the first cycle get color 2,
// and every other edge keeps its cycle index as color. Every color-1
// component is confined to one block.
HamiltonColoring color_hamilton(const HamiltonDecomposition& decomp, int r,
                                const HamiltonColoringParams& params = {});

}  // namespace monocomp
