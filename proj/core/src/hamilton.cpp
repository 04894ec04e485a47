#include "monocomp/hamilton.hpp"

namespace monocomp {

bool HamiltonDecomposition::valid() const {
  for (const auto& cyc : cycles) {
    if (static_cast<int>(cyc.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int v : cyc) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
    }
  }
  return true;
}

}  // namespace monocomp
