#pragma once

#include <cstdint>
#include <vector>

#include "monocomp/arborescence.hpp"
#include "monocomp/block_partition.hpp"
#include "monocomp/digraph.hpp"
#include "monocomp/edge_coloring.hpp"

namespace monocomp {

struct KoutColoringParams {
  double block_exponent = 0.9;  // blocks of ~n^0.9 vertices
  double peel_exponent = 0.85;  // arborescence order cap n^0.85
};

struct KoutColoring {
  EdgeColoring coloring;   // r colors, indexed by the digraph-sum edge-id layout
  BlockPartition blocks;   // unions of peeled first-digraph arborescences
  std::vector<int> estar;  // first-digraph edge-ids recolored 2 (cycle + cut arcs)
  ArborescenceForest forest;
  int peel_iterations = 0;
  std::int64_t peel_threshold = 0;
};

// Colors the edge set of a sum of r >= 2 functional digraphs: the first
// digraph is stripped of its cycle arcs and peeled until every arborescence
// has order <= n^peel_exponent, arborescences are grouped into blocks of
// ~n^block_exponent vertices; edges inside a block get color 1, the stripped
// and peeled arcs get color 2, and every other edge keeps its digraph index
// + 1 as color. Every color-1 component is confined to one block.
KoutColoring color_kout(const std::vector<FunctionalDigraph>& digraphs, int r,
                        const KoutColoringParams& params = {});

}  // namespace monocomp
