#include "monocomp/mono_stats.hpp"

#include <string>

#include "monocomp/errors.hpp"
#include "monocomp/union_find.hpp"

namespace monocomp {

MonoStats mono_stats(const MultiGraph& g, const EdgeColoring& coloring, int r) {
  if (r < 1) throw config_error("mono_stats needs r >= 1");
  EdgeColoring check = coloring;
  check.colors = r;
  require_total(check, g);

  MonoStats stats;
  stats.per_color.resize(r);
  UnionFind uf;
  for (int c = 1; c <= r; ++c) {
    uf.reset(g.n);
    for (int e = 0; e < g.edge_count(); ++e) {
      if (coloring.color[e] == c) uf.unite(g.edges[e].u, g.edges[e].v);
    }
    ColorStats& cs = stats.per_color[c - 1];
    cs.component_count = uf.components;
    for (int v = 0; v < g.n; ++v) {
      if (uf.find(v) == v && uf.size[v] > cs.max_component) cs.max_component = uf.size[v];
    }
    if (cs.max_component > stats.max_component) {
      stats.max_component = cs.max_component;
      stats.argmax_color = c;
    }
  }
  stats.max_fraction = g.n > 0 ? static_cast<double>(stats.max_component) / g.n : 0.0;
  return stats;
}

}  // namespace monocomp
