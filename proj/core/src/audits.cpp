#include "monocomp/audits.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monocomp/errors.hpp"
#include "monocomp/union_find.hpp"

namespace monocomp {

PathAudit path_length_audit(const HamiltonDecomposition& decomp, const EdgeColoring& coloring,
                            double threshold_exponent) {
  const int n = decomp.n;
  const int r = decomp.r();
  if (static_cast<std::int64_t>(coloring.color.size()) != static_cast<std::int64_t>(n) * r)
    throw contract_violation("coloring does not match the cycle-sum edge layout");

  PathAudit audit;
  audit.threshold = static_cast<std::int64_t>(std::floor(std::pow(n, threshold_exponent)));
  audit.max_per_color.assign(r + 1, 0);
  for (int c = 2; c <= r; ++c) {
    const std::int64_t base = static_cast<std::int64_t>(c - 1) * n;
    int absent = -1;
    for (int j = 0; j < n && absent == -1; ++j) {
      if (coloring.color[base + j] != c) absent = j;
    }
    if (absent == -1)
      throw contract_violation("color " + std::to_string(c) +
                               " kept every edge of its cycle; expected disjoint paths");
    // walk the cycle once starting after an absent edge, measuring runs
    int run = 0;
    for (int step = 1; step <= n; ++step) {
      const int j = (absent + step) % n;
      if (coloring.color[base + j] == c) {
        ++run;
      } else {
        if (run > audit.max_per_color[c]) audit.max_per_color[c] = run;
        if (run > audit.threshold) ++audit.violations;
        run = 0;
      }
    }
    audit.max_len = std::max(audit.max_len, audit.max_per_color[c]);
  }
  return audit;
}

ArboStats arborescence_stats(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<int> succ(n, -1);
  for (const auto& [u, v] : arcs) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw config_error("arborescence_stats: arc endpoint out of range");
    if (succ[u] != -1) throw config_error("arborescence_stats: vertex has out-degree > 1");
    succ[u] = v;
  }

  ArboStats stats;
  if (arcs.empty()) return stats;

  UnionFind uf(n);
  std::vector<char> touched(n, 0);
  for (const auto& [u, v] : arcs) {
    uf.unite(u, v);
    touched[u] = touched[v] = 1;
  }

  std::vector<std::int64_t> comp_arcs(n, 0);
  for (const auto& [u, v] : arcs) {
    (void)v;
    ++comp_arcs[uf.find(u)];
  }

  // Break each unicyclic component into an arborescence: drop the out-arc of
  // the smallest on-cycle vertex. A vertex lies on a cycle iff following
  // succ from it returns to it.
  std::vector<char> state(n, 0);  // 0 unseen, 1 on walk, 2 done
  std::vector<int> walk;
  for (int start = 0; start < n; ++start) {
    if (!touched[start] || state[start] != 0) continue;
    walk.clear();
    int v = start;
    while (v != -1 && state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = succ[v];
    }
    if (v != -1 && state[v] == 1) {
      int mn = v, w = succ[v];
      while (w != v) {
        mn = std::min(mn, w);
        w = succ[w];
      }
      succ[mn] = -1;
    }
    for (int u : walk) state[u] = 2;
  }

  // depths toward the roots
  std::vector<int> depth(n, -1);
  std::vector<int> chain;
  for (int v = 0; v < n; ++v) {
    if (!touched[v] || depth[v] != -1) continue;
    chain.clear();
    int u = v;
    while (u != -1 && depth[u] == -1) {
      chain.push_back(u);
      u = succ[u];
    }
    int d = (u == -1) ? 0 : depth[u] + 1;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      depth[*it] = d++;
    }
  }

  for (int v = 0; v < n; ++v) {
    if (!touched[v]) continue;
    if (uf.find(v) == v) {
      ++stats.component_count;
      stats.max_order = std::max(stats.max_order, uf.size[v]);
      if (comp_arcs[v] == uf.size[v]) ++stats.unicyclic_count;
    }
    stats.max_height = std::max(stats.max_height, depth[v]);
  }
  return stats;
}

}  // namespace monocomp
