#include "monocomp/euler.hpp"

#include <string>

#include "monocomp/errors.hpp"

namespace monocomp {

Orientation euler_orient(const MultiGraph& g) {
  const std::vector<int> deg = degree_sequence(g);
  for (int v = 0; v < g.n; ++v) {
    if (deg[v] % 2 != 0)
      throw config_error("euler_orient: vertex " + std::to_string(v) + " has odd degree " +
                         std::to_string(deg[v]));
  }

  const Adjacency adj = build_adjacency(g);
  Orientation o;
  o.reversed.assign(g.edge_count(), 0);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<int> cursor(adj.offset.begin(), adj.offset.end() - 1);
  std::vector<int> stack;

  for (int s = 0; s < g.n; ++s) {
    if (cursor[s] == adj.offset[s + 1]) continue;
    stack.assign(1, s);
    while (!stack.empty()) {
      const int v = stack.back();
      while (cursor[v] < adj.offset[v + 1] && used[adj.edge_id[cursor[v]]]) ++cursor[v];
      if (cursor[v] == adj.offset[v + 1]) {
        stack.pop_back();
        continue;
      }
      const int e = adj.edge_id[cursor[v]];
      const int w = adj.neighbor[cursor[v]];
      used[e] = 1;
      o.reversed[e] = (g.edges[e].u == v) ? 0 : 1;  // traverse v -> w
      stack.push_back(w);
    }
  }
  return o;
}

std::vector<int> in_degrees(const MultiGraph& g, const Orientation& o) {
  std::vector<int> indeg(g.n, 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    ++indeg[o.reversed[e] ? g.edges[e].u : g.edges[e].v];
  }
  return indeg;
}

}  // namespace monocomp
