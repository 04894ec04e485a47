#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "monocomp/block_partition.hpp"
#include "monocomp/digraph.hpp"

namespace monocomp {

// Forest of in-arborescences over [0, n): parent[v] is the target of v's
// out-arc, -1 at roots. Arcs point toward the root.
struct ArborescenceForest {
  int n = 0;
  std::vector<int> parent;

  bool valid() const;  // acyclic, parents in range
  std::vector<int> roots() const;
  std::vector<int> root_of() const;                 // vertex -> its root
  std::vector<std::int64_t> order_of_root() const;  // indexed by vertex; 0 unless root
};

struct StripResult {
  ArborescenceForest forest;
  // Sources of the removed arcs: the smallest vertex of each cycle, in
  // cycle order. These become the roots.
  std::vector<int> removed_arc_sources;
};

// Deletes one out-arc per directed cycle (at the cycle's smallest vertex),
// turning the functional digraph into one in-arborescence per cycle.
StripResult strip_cycles(const FunctionalDigraph& d);

struct PeelResult {
  ArborescenceForest forest;
  std::vector<std::pair<int, int>> cut_arcs;  // (child, former parent)
  int iterations = 0;
};

// Repeatedly finds the smallest-labeled vertex whose subtree order exceeds
// `threshold` while all of its children's subtrees are within it, and cuts
// every in-arc of that vertex (the children become roots). Runs until every
// arborescence order is <= threshold. Requires threshold >= 1.
PeelResult peel_arborescences(const ArborescenceForest& forest, std::int64_t threshold);

// Orders the arborescences by smallest contained vertex, then cuts the
// sequence greedily into blocks of at least n^block_exponent vertices
// (each block is a minimal prefix reaching the next multiple). Requires
// every arborescence order <= order_cap; throws contract_violation
// otherwise. Trailing empty blocks are dropped.
BlockPartition partition_blocks(const ArborescenceForest& forest, std::int64_t order_cap,
                                double block_exponent = 0.9);

}  // namespace monocomp
