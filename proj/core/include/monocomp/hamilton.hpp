#pragma once

#include <vector>

namespace monocomp {

// r spanning cycles over [0, n); each cycle is a permutation of the vertex
// set, read cyclically (entry j is adjacent to entry (j+1) mod n).
struct HamiltonDecomposition {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  int r() const { return static_cast<int>(cycles.size()); }
  bool valid() const;
};

}  // namespace monocomp
