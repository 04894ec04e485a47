#include "monocomp/digraph.hpp"

#include <algorithm>

namespace monocomp {

bool FunctionalDigraph::valid() const {
  if (static_cast<int>(succ.size()) != n) return false;
  for (int v = 0; v < n; ++v) {
    if (succ[v] < 0 || succ[v] >= n || succ[v] == v) return false;
  }
  return true;
}

std::vector<std::vector<int>> find_cycles(const FunctionalDigraph& d) {
  // 0 = unseen, 1 = on the current walk, 2 = finished
  std::vector<char> state(d.n, 0);
  std::vector<int> walk;
  std::vector<std::vector<int>> cycles;
  for (int start = 0; start < d.n; ++start) {
    if (state[start] != 0) continue;
    walk.clear();
    int v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = d.succ[v];
    }
    if (state[v] == 1) {
      // v closes a new cycle; walk from v around it
      std::vector<int> cyc;
      int w = v;
      do {
        cyc.push_back(w);
        w = d.succ[w];
      } while (w != v);
      const auto mn = std::min_element(cyc.begin(), cyc.end());
      std::rotate(cyc.begin(), mn, cyc.end());
      cycles.push_back(std::move(cyc));
    }
    for (int u : walk) state[u] = 2;
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return cycles;
}

}  // namespace monocomp
