#pragma once

#include <vector>

namespace monocomp {

// Every vertex has exactly one out-arc and no fixed points (succ[v] != v).
struct FunctionalDigraph {
  int n = 0;
  std::vector<int> succ;

  bool valid() const;
};

// The vertex-disjoint directed cycles (every functional digraph has at least
// one). Each cycle is listed starting from its smallest vertex, following
// succ; cycles ordered by that smallest vertex.
std::vector<std::vector<int>> find_cycles(const FunctionalDigraph& d);

}  // namespace monocomp
