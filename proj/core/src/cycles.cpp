#include "monocomp/cycles.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include "monocomp/errors.hpp"

namespace monocomp {

bool is_valid_cycle(const MultiGraph& g, const Cycle& c) {
  const int len = c.length();
  if (len < 1 || static_cast<int>(c.edge_ids.size()) != len) return false;
  std::vector<char> seen_v(g.n, 0);
  for (int v : c.vertices) {
    if (v < 0 || v >= g.n || seen_v[v]) return false;
    seen_v[v] = 1;
  }
  std::vector<int> ids = c.edge_ids;
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  for (int i = 0; i < len; ++i) {
    const int e = c.edge_ids[i];
    if (e < 0 || e >= g.edge_count()) return false;
    const int a = c.vertices[i];
    const int b = c.vertices[(i + 1) % len];
    const Edge& ed = g.edges[e];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
  }
  // a length-1 cycle must be a loop; the modulo check above already forces
  // edges[e] == (v, v) in that case, and length 2 forces two distinct
  // parallel edges, so nothing extra is needed here.
  return true;
}

namespace {

struct DedupGraph {
  std::vector<int> offset;
  std::vector<int> nbr;
  std::vector<int> rep_edge;  // smallest edge-id joining the pair

  explicit DedupGraph(const MultiGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (nbr, edge)
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto [u, v] = g.edges[e];
      if (u == v) continue;
      adj[u].emplace_back(v, e);
      adj[v].emplace_back(u, e);
    }
    offset.assign(g.n + 1, 0);
    for (int v = 0; v < g.n; ++v) {
      auto& lst = adj[v];
      std::sort(lst.begin(), lst.end());
      int kept = 0;
      for (std::size_t i = 0; i < lst.size();) {
        std::size_t j = i;
        while (j < lst.size() && lst[j].first == lst[i].first) ++j;
        lst[kept++] = lst[i];  // smallest edge-id comes first after sort
        i = j;
      }
      lst.resize(kept);
      offset[v + 1] = offset[v] + kept;
    }
    nbr.resize(offset[g.n]);
    rep_edge.resize(offset[g.n]);
    for (int v = 0; v < g.n; ++v) {
      int at = offset[v];
      for (const auto& [w, e] : adj[v]) {
        nbr[at] = w;
        rep_edge[at++] = e;
      }
    }
  }

  int degree(int v) const { return offset[v + 1] - offset[v]; }
};

struct Best {
  int len = 0;
  std::vector<int> vertices;
  std::vector<int> edges;

  void offer(int cand_len, std::vector<int>&& vs, std::vector<int>&& es) {
    if (cand_len > len) {
      len = cand_len;
      vertices = std::move(vs);
      edges = std::move(es);
    }
  }
};

// Pósa-style rotation on the deepest DFS path: close the best cycle through
// the tip, then rotate to expose a fresh tip and try to extend.
void rotate_and_extend(const DedupGraph& dg, const std::vector<int>& perm, std::vector<int> path,
                       std::vector<int> path_edges, std::vector<int>& pos, Best& best,
                       std::int64_t& steps, std::int64_t budget) {
  const int n = static_cast<int>(pos.size());
  for (int v : path) pos[v] = -1;
  for (std::size_t i = 0; i < path.size(); ++i) pos[path[i]] = static_cast<int>(i);

  std::int64_t rotations = 0;
  const std::int64_t rotation_cap = 4LL * n + 16;
  while (steps < budget && rotations < rotation_cap) {
    const int tip = path.back();
    const int L = static_cast<int>(path.size());
    int extend_w = -1, extend_e = -1;
    int close_at = -1, close_e = -1;
    for (int j = dg.offset[tip]; j < dg.offset[tip + 1]; ++j) {
      ++steps;
      const int w = dg.nbr[perm[j]];
      const int e = dg.rep_edge[perm[j]];
      if (pos[w] == -1) {
        extend_w = w;
        extend_e = e;
        break;
      }
      const int i = pos[w];
      if (i == L - 2) continue;  // the edge we arrived by
      const int cand = L - i;
      if (cand >= 3 && cand > best.len) {
        std::vector<int> vs(path.begin() + i, path.end());
        std::vector<int> es(path_edges.begin() + i, path_edges.end());
        es.push_back(e);
        best.offer(cand, std::move(vs), std::move(es));
      }
      if (close_at == -1 || i < close_at) {
        close_at = i;
        close_e = e;
      }
    }
    if (extend_w != -1) {
      pos[extend_w] = L;
      path.push_back(extend_w);
      path_edges.push_back(extend_e);
      continue;
    }
    if (close_at == -1 || close_at >= L - 2) break;  // nothing to rotate with
    // rotate: keep path[0..close_at], close to tip, reverse the rest
    std::reverse(path.begin() + close_at + 1, path.end());
    std::reverse(path_edges.begin() + close_at + 1, path_edges.end());
    path_edges[close_at] = close_e;
    for (int i = close_at + 1; i < L; ++i) pos[path[i]] = i;
    ++rotations;
    steps += L - close_at;
  }
  for (int v : path) pos[v] = -1;
}

void dfs_restart(const DedupGraph& dg, int n, Rng& rng, Best& best, std::int64_t& steps,
                 std::int64_t budget) {
  // per-restart random scan order over the adjacency arrays
  std::vector<int> perm(dg.nbr.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
  for (int v = 0; v < n; ++v) {
    if (dg.offset[v + 1] - dg.offset[v] > 1) {
      for (int i = dg.offset[v + 1] - dg.offset[v]; i > 1; --i) {
        const int j = static_cast<int>(bounded(rng, i));
        std::swap(perm[dg.offset[v] + i - 1], perm[dg.offset[v] + j]);
      }
    }
  }
  steps += static_cast<std::int64_t>(perm.size());

  std::vector<int> pos(n, -1);
  std::vector<char> visited(n, 0);
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  shuffle_vec(order, rng);

  std::vector<int> path, path_edges;
  std::vector<int> longest_path, longest_edges;
  std::vector<std::pair<int, int>> stack;  // (vertex, cursor)

  for (int start : order) {
    if (visited[start] || steps >= budget) continue;
    path.clear();
    path_edges.clear();
    stack.clear();
    visited[start] = 1;
    pos[start] = 0;
    path.push_back(start);
    stack.emplace_back(start, dg.offset[start]);
    while (!stack.empty() && steps < budget) {
      auto& [v, cursor] = stack.back();
      if (cursor == dg.offset[v + 1]) {
        if (path.size() > longest_path.size()) {
          longest_path = path;
          longest_edges = path_edges;
        }
        pos[v] = -1;
        path.pop_back();
        if (!path_edges.empty()) path_edges.pop_back();
        stack.pop_back();
        continue;
      }
      const int slot = perm[cursor++];
      ++steps;
      const int w = dg.nbr[slot];
      const int e = dg.rep_edge[slot];
      if (!path_edges.empty() && e == path_edges.back()) continue;  // arrival edge
      if (pos[w] != -1) {
        const int cand = pos[v] - pos[w] + 1;
        if (cand >= 3 && cand > best.len) {
          std::vector<int> vs(path.begin() + pos[w], path.end());
          std::vector<int> es(path_edges.begin() + pos[w], path_edges.end());
          es.push_back(e);
          best.offer(cand, std::move(vs), std::move(es));
        }
        continue;
      }
      if (visited[w]) continue;  // reached via an earlier branch
      visited[w] = 1;
      pos[w] = static_cast<int>(path.size());
      path.push_back(w);
      path_edges.push_back(e);
      stack.emplace_back(w, dg.offset[w]);
    }
    for (int v : path) pos[v] = -1;  // budget may have left a live path
    if (path.size() > longest_path.size()) {
      longest_path = path;
      longest_edges = path_edges;
    }
  }

  if (longest_path.size() >= 3) {
    rotate_and_extend(dg, perm, std::move(longest_path), std::move(longest_edges), pos, best,
                      steps, budget);
  }
}

}  // namespace

std::optional<Cycle> find_long_cycle(const MultiGraph& g, const LongCycleParams& params) {
  Best best;

  for (int e = 0; e < g.edge_count(); ++e) {
    if (g.edges[e].u == g.edges[e].v) {
      best.offer(1, {g.edges[e].u}, {e});
      break;
    }
  }
  {
    std::unordered_map<long long, int> first;
    first.reserve(g.edges.size() * 2);
    for (int e = 0; e < g.edge_count() && best.len < 2; ++e) {
      const auto [u, v] = g.edges[e];
      if (u == v) continue;
      const long long key =
          static_cast<long long>(std::min(u, v)) * g.n + std::max(u, v);
      auto [it, inserted] = first.try_emplace(key, e);
      if (!inserted) best.offer(2, {g.edges[e].u, g.edges[e].v}, {it->second, e});
    }
  }

  const std::int64_t budget =
      params.budget > 0 ? params.budget : 50LL * std::max(g.n, 1);
  const int restarts = std::max(params.restarts, 1);
  DedupGraph dg(g);
  std::int64_t steps = 0;
  for (int t = 0; t < restarts && steps < budget; ++t) {
    Rng rng(splitmix64(params.seed ^ (0x51CEC11Eull + static_cast<Seed>(t))));
    dfs_restart(dg, g.n, rng, best, steps, budget);
  }

  if (best.len == 0) return std::nullopt;
  Cycle cyc{std::move(best.vertices), std::move(best.edges)};
  if (!is_valid_cycle(g, cyc))
    throw contract_violation("cycle search produced an invalid cycle");
  return cyc;
}

int longest_cycle_exact(const MultiGraph& g) {
  if (g.n > 15)
    throw config_error("exact longest cycle is limited to n <= 15, got n = " +
                       std::to_string(g.n));
  int best = 0;
  std::vector<std::uint32_t> adjmask(g.n, 0);
  std::unordered_map<long long, int> pair_count;
  for (const Edge& e : g.edges) {
    if (e.u == e.v) {
      best = std::max(best, 1);
      continue;
    }
    adjmask[e.u] |= 1u << e.v;
    adjmask[e.v] |= 1u << e.u;
    const long long key =
        static_cast<long long>(std::min(e.u, e.v)) * g.n + std::max(e.u, e.v);
    if (++pair_count[key] == 2) best = std::max(best, 2);
  }

  const int n = g.n;
  std::vector<std::uint32_t> dp(std::size_t{1} << std::max(n, 1), 0);
  for (int a = 0; a < n; ++a) {
    const std::uint32_t allowed = ((n < 32 ? (1u << n) : 0u) - 1) & ~((1u << a) - 1u);
    if (std::popcount(adjmask[a] & allowed) < 2) continue;
    const std::uint32_t full = allowed;
    std::fill(dp.begin(), dp.end(), 0u);
    dp[1u << a] = 1u << a;
    for (std::uint32_t mask = 1u << a; mask < (1u << n); ++mask) {
      if (!(mask & (1u << a)) || (mask & ~full)) continue;
      std::uint32_t ends = dp[mask];
      if (!ends) continue;
      if (std::popcount(mask) >= 3 && (ends & adjmask[a]))
        best = std::max(best, std::popcount(mask));
      while (ends) {
        const int v = std::countr_zero(ends);
        ends &= ends - 1;
        std::uint32_t nxt = adjmask[v] & full & ~mask;
        while (nxt) {
          const int w = std::countr_zero(nxt);
          nxt &= nxt - 1;
          dp[mask | (1u << w)] |= 1u << w;
        }
      }
    }
  }
  return best;
}

}  // namespace monocomp
