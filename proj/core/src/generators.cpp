#include "monocomp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "monocomp/errors.hpp"

namespace monocomp {

MultiGraph pairing_model(int n, int d, Seed seed) {
  if (n < 1 || d < 1) throw config_error("pairing model needs n >= 1, d >= 1");
  const long long points = static_cast<long long>(n) * d;
  if (points % 2 != 0) throw config_error("pairing model needs n*d even");
  Rng rng(seed);
  std::vector<int> perm(points);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle_vec(perm, rng);
  MultiGraph g;
  g.n = n;
  g.edges.reserve(points / 2);
  // consecutive entries of a uniform permutation form a uniform matching
  for (long long i = 0; i < points; i += 2) {
    g.add_edge(perm[i] / d, perm[i + 1] / d);
  }
  return g;
}

static bool is_simple(const MultiGraph& g) {
  std::unordered_set<long long> seen;
  seen.reserve(g.edges.size() * 2);
  for (const Edge& e : g.edges) {
    if (e.u == e.v) return false;
    const long long key = static_cast<long long>(std::min(e.u, e.v)) * g.n +
                          std::max(e.u, e.v);
    if (!seen.insert(key).second) return false;
  }
  return true;
}

MultiGraph simple_regular(int n, int d, Seed seed, int max_attempts) {
  if (d >= n) throw config_error("simple d-regular graph needs d < n");
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    MultiGraph g = pairing_model(n, d, splitmix64(seed ^ static_cast<Seed>(attempt)));
    if (is_simple(g)) return g;
  }
  throw config_error("no simple " + std::to_string(d) + "-regular graph on " +
                     std::to_string(n) + " vertices in " + std::to_string(max_attempts) +
                     " attempts; d is likely too large for rejection sampling");
}

HamiltonSample hamilton_sum(int n, int r, Seed seed) {
  if (n < 3 || r < 1) throw config_error("cycle sum needs n >= 3, r >= 1");
  Rng rng(seed);
  HamiltonSample s;
  s.graph.n = n;
  s.graph.edges.reserve(static_cast<std::size_t>(n) * r);
  s.decomposition.n = n;
  for (int i = 0; i < r; ++i) {
    std::vector<int> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0);
    shuffle_vec(cyc, rng);
    for (int j = 0; j < n; ++j) {
      s.graph.add_edge(cyc[j], cyc[(j + 1) % n]);
    }
    s.decomposition.cycles.push_back(std::move(cyc));
  }
  return s;
}

KoutSample kout_sum(int n, int k, Seed seed) {
  if (n < 2 || k < 1) throw config_error("digraph sum needs n >= 2, k >= 1");
  Rng rng(seed);
  KoutSample s;
  s.graph.n = n;
  s.graph.edges.reserve(static_cast<std::size_t>(n) * k);
  for (int i = 0; i < k; ++i) {
    FunctionalDigraph d;
    d.n = n;
    d.succ.resize(n);
    for (int v = 0; v < n; ++v) {
      // uniform over [0, n) \ {v}
      int x = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(n) - 1));
      if (x >= v) ++x;
      d.succ[v] = x;
      s.graph.add_edge(v, x);
    }
    s.digraphs.push_back(std::move(d));
  }
  return s;
}

}  // namespace monocomp
