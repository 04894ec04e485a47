#include "monocomp/multigraph.hpp"

#include <algorithm>
#include <sstream>

#include "monocomp/errors.hpp"
#include "monocomp/union_find.hpp"

namespace monocomp {

bool MultiGraph::valid() const {
  for (const Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) return false;
  }
  return true;
}

static std::vector<std::vector<int>> components_impl(const MultiGraph& g,
                                                     const EdgePredicate* keep) {
  UnionFind uf(g.n);
  for (int e = 0; e < g.edge_count(); ++e) {
    if (keep && !(*keep)(e)) continue;
    uf.unite(g.edges[e].u, g.edges[e].v);
  }
  std::vector<std::vector<int>> by_root(g.n);
  for (int v = 0; v < g.n; ++v) by_root[uf.find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& bucket : by_root) {
    if (!bucket.empty()) comps.push_back(std::move(bucket));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return comps;
}

std::vector<std::vector<int>> components(const MultiGraph& g) {
  return components_impl(g, nullptr);
}

std::vector<std::vector<int>> components(const MultiGraph& g, const EdgePredicate& keep) {
  return components_impl(g, &keep);
}

Subgraph induced_subgraph(const MultiGraph& g, const EdgePredicate& keep) {
  Subgraph s;
  s.graph.n = g.n;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!keep(e)) continue;
    s.graph.edges.push_back(g.edges[e]);
    s.original_edge.push_back(e);
  }
  return s;
}

std::vector<int> degree_sequence(const MultiGraph& g) {
  std::vector<int> deg(g.n, 0);
  for (const Edge& e : g.edges) {
    ++deg[e.u];
    ++deg[e.v];  // loops hit the same entry twice
  }
  return deg;
}

Adjacency build_adjacency(const MultiGraph& g) {
  Adjacency a;
  a.offset.assign(g.n + 1, 0);
  for (const Edge& e : g.edges) {
    ++a.offset[e.u + 1];
    ++a.offset[e.v + 1];
  }
  for (int v = 0; v < g.n; ++v) a.offset[v + 1] += a.offset[v];
  a.neighbor.resize(a.offset[g.n]);
  a.edge_id.resize(a.offset[g.n]);
  std::vector<int> cursor(a.offset.begin(), a.offset.end() - 1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edges[e];
    a.neighbor[cursor[u]] = v;
    a.edge_id[cursor[u]++] = e;
    a.neighbor[cursor[v]] = u;
    a.edge_id[cursor[v]++] = e;
  }
  return a;
}

std::string write_graph(const MultiGraph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

MultiGraph read_graph(const std::string& text) {
  std::istringstream in(text);
  MultiGraph g;
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) throw config_error("graph text: bad header");
  g.n = static_cast<int>(n);
  g.edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw config_error("graph text: truncated edge list");
    g.edges.push_back({u, v});
  }
  if (!g.valid()) throw config_error("graph text: endpoint out of range");
  return g;
}

}  // namespace monocomp
