#pragma once

#include <functional>
#include <string>
#include <vector>

namespace monocomp {

struct Edge {
  int u = 0;
  int v = 0;
};

// Undirected multigraph on vertices [0, n). Edge identity is positional:
// edge-id i refers to edges[i] and ids are dense in [0, m). Loops (u == v)
// and parallel edges are distinct records.
struct MultiGraph {
  int n = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  void add_edge(int u, int v) { edges.push_back({u, v}); }
  bool valid() const;  // all endpoints in [0, n)
};

using EdgePredicate = std::function<bool(int)>;  // by edge-id

// Connected components over the full vertex set (isolated vertices are
// singletons), sorted by size descending, ties by smallest member.
std::vector<std::vector<int>> components(const MultiGraph& g);
// Same, but only edges with keep(edge_id) == true are present.
std::vector<std::vector<int>> components(const MultiGraph& g, const EdgePredicate& keep);

struct Subgraph {
  MultiGraph graph;                // same vertex set; kept edges re-densified
  std::vector<int> original_edge;  // new edge-id -> old edge-id
};

Subgraph induced_subgraph(const MultiGraph& g, const EdgePredicate& keep);

// Loops contribute 2 to their endpoint.
std::vector<int> degree_sequence(const MultiGraph& g);

// Half-edge adjacency in CSR form; a loop contributes two half-edges at its
// vertex, both carrying the same edge-id.
struct Adjacency {
  std::vector<int> offset;  // size n+1
  std::vector<int> neighbor;
  std::vector<int> edge_id;
};

Adjacency build_adjacency(const MultiGraph& g);

// Text format: header line "n m", then one "u v" line per edge in id order.
std::string write_graph(const MultiGraph& g);
MultiGraph read_graph(const std::string& text);

}  // namespace monocomp
