#include "monocomp/adversarial.hpp"

#include <numeric>

#include "monocomp/errors.hpp"
#include "monocomp/euler.hpp"
#include "monocomp/union_find.hpp"

namespace monocomp {

const char* to_string(Strategy s) {
  switch (s) {
    case Strategy::uniform_random: return "uniform-random";
    case Strategy::greedy_balanced: return "greedy-balanced";
    case Strategy::orientation_split: return "orientation-split";
  }
  return "?";
}

std::optional<Strategy> strategy_from_string(std::string_view name) {
  if (name == "uniform-random") return Strategy::uniform_random;
  if (name == "greedy-balanced") return Strategy::greedy_balanced;
  if (name == "orientation-split") return Strategy::orientation_split;
  return std::nullopt;
}

EdgeColoring greedy_balanced_coloring(const MultiGraph& g, int r,
                                      const std::vector<int>& edge_order) {
  if (r < 1) throw config_error("greedy coloring needs r >= 1");
  if (static_cast<int>(edge_order.size()) != g.edge_count())
    throw config_error("edge_order must be a permutation of the edge-ids");

  EdgeColoring col;
  col.colors = r;
  col.color.assign(g.edge_count(), 0);
  std::vector<UnionFind> forest(r, UnionFind(g.n));
  for (int e : edge_order) {
    if (e < 0 || e >= g.edge_count() || col.color[e] != 0)
      throw config_error("edge_order must be a permutation of the edge-ids");
    const auto [u, v] = g.edges[e];
    int pick = 1;
    int pick_size = -1;
    for (int c = 1; c <= r; ++c) {
      UnionFind& uf = forest[c - 1];
      const int ru = uf.find(u), rv = uf.find(v);
      const int merged = ru == rv ? uf.size[ru] : uf.size[ru] + uf.size[rv];
      if (pick_size < 0 || merged < pick_size) {
        pick = c;
        pick_size = merged;
      }
    }
    col.color[e] = pick;
    forest[pick - 1].unite(u, v);
  }
  return col;
}

AdversarialColoring adversarial_color(const MultiGraph& g, int r, Strategy strategy, Seed seed) {
  if (r < 1) throw config_error("adversarial coloring needs r >= 1");
  AdversarialColoring out;
  out.requested = strategy;

  switch (strategy) {
    case Strategy::uniform_random: {
      Rng rng(splitmix64(seed));
      out.coloring.colors = r;
      out.coloring.color.resize(g.edge_count());
      for (int e = 0; e < g.edge_count(); ++e) {
        out.coloring.color[e] = 1 + static_cast<int>(bounded(rng, r));
      }
      break;
    }
    case Strategy::greedy_balanced: {
      Rng rng(splitmix64(seed));
      std::vector<int> order(g.edge_count());
      std::iota(order.begin(), order.end(), 0);
      shuffle_vec(order, rng);
      out.coloring = greedy_balanced_coloring(g, r, order);
      break;
    }
    case Strategy::orientation_split: {
      try {
        const Orientation o = euler_orient(g);
        out.coloring.colors = r;
        out.coloring.color.resize(g.edge_count());
        for (int e = 0; e < g.edge_count(); ++e) {
          const int head = o.reversed[e] ? g.edges[e].u : g.edges[e].v;
          out.coloring.color[e] = 1 + static_cast<int>(splitmix64(splitmix64(seed) ^
                                                                  static_cast<Seed>(head)) %
                                                       r);
        }
      } catch (const config_error&) {
        // odd degrees: no Euler orientation exists
        out.fell_back = true;
        Rng rng(splitmix64(seed));
        std::vector<int> order(g.edge_count());
        std::iota(order.begin(), order.end(), 0);
        shuffle_vec(order, rng);
        out.coloring = greedy_balanced_coloring(g, r, order);
      }
      break;
    }
  }
  return out;
}

}  // namespace monocomp
