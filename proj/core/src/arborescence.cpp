#include "monocomp/arborescence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monocomp/errors.hpp"

namespace monocomp {

bool ArborescenceForest::valid() const {
  if (static_cast<int>(parent.size()) != n) return false;
  std::vector<int> stamp(n, -1);
  for (int v = 0; v < n; ++v) {
    if (parent[v] < -1 || parent[v] >= n) return false;
    int u = v;
    while (u != -1 && stamp[u] != v) {
      if (stamp[u] != -1) break;  // joins a chain already verified
      stamp[u] = v;
      u = parent[u];
    }
    if (u != -1 && stamp[u] == v) return false;  // walk revisited itself: cycle
  }
  return true;
}

std::vector<int> ArborescenceForest::roots() const {
  std::vector<int> rs;
  for (int v = 0; v < n; ++v) {
    if (parent[v] == -1) rs.push_back(v);
  }
  return rs;
}

std::vector<int> ArborescenceForest::root_of() const {
  std::vector<int> root(n, -1);
  std::vector<int> chain;
  for (int v = 0; v < n; ++v) {
    if (root[v] != -1) continue;
    chain.clear();
    int u = v;
    while (u != -1 && root[u] == -1) {
      chain.push_back(u);
      u = parent[u];
    }
    const int r = (u == -1) ? chain.back() : root[u];
    for (int w : chain) root[w] = r;
  }
  return root;
}

std::vector<std::int64_t> ArborescenceForest::order_of_root() const {
  std::vector<std::int64_t> order(n, 0);
  for (int r : root_of()) ++order[r];
  return order;
}

StripResult strip_cycles(const FunctionalDigraph& d) {
  if (!d.valid()) throw config_error("strip_cycles: input is not a functional digraph");
  StripResult res;
  res.forest.n = d.n;
  res.forest.parent = d.succ;
  for (const auto& cyc : find_cycles(d)) {
    res.forest.parent[cyc.front()] = -1;  // front is the cycle's smallest vertex
    res.removed_arc_sources.push_back(cyc.front());
  }
  return res;
}

namespace {

struct ForestIndex {
  std::vector<int> child_offset;  // CSR over children
  std::vector<int> child;
  std::vector<int> bfs;                  // parents before children
  std::vector<std::int64_t> subtree;     // current subtree order per vertex
  std::vector<int> root;                 // current root per vertex

  explicit ForestIndex(const ArborescenceForest& f) {
    const int n = f.n;
    child_offset.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) {
      if (f.parent[v] != -1) ++child_offset[f.parent[v] + 1];
    }
    for (int v = 0; v < n; ++v) child_offset[v + 1] += child_offset[v];
    child.resize(child_offset[n]);
    std::vector<int> cursor(child_offset.begin(), child_offset.end() - 1);
    for (int v = 0; v < n; ++v) {
      if (f.parent[v] != -1) child[cursor[f.parent[v]]++] = v;
    }
    bfs.reserve(n);
    root.assign(n, -1);
    for (int v = 0; v < n; ++v) {
      if (f.parent[v] == -1) {
        bfs.push_back(v);
        root[v] = v;
      }
    }
    for (std::size_t i = 0; i < bfs.size(); ++i) {
      const int u = bfs[i];
      for (int j = child_offset[u]; j < child_offset[u + 1]; ++j) {
        bfs.push_back(child[j]);
        root[child[j]] = root[u];
      }
    }
    if (static_cast<int>(bfs.size()) != n)
      throw config_error("peel: parent array contains a cycle");
    subtree.assign(n, 1);
    for (auto it = bfs.rbegin(); it != bfs.rend(); ++it) {
      const int v = *it;
      for (int j = child_offset[v]; j < child_offset[v + 1]; ++j)
        subtree[v] += subtree[child[j]];
    }
  }
};

}  // namespace

PeelResult peel_arborescences(const ArborescenceForest& forest, std::int64_t threshold) {
  if (threshold < 1) throw config_error("peel: threshold must be >= 1");
  PeelResult res;
  res.forest = forest;
  ForestIndex ix(res.forest);

  std::vector<int> big_roots;
  for (int v = 0; v < forest.n; ++v) {
    if (res.forest.parent[v] == -1 && ix.subtree[v] > threshold) big_roots.push_back(v);
  }

  std::vector<int> stack;
  while (!big_roots.empty()) {
    // the smallest-labeled vertex whose subtree exceeds the threshold while
    // all of its children's subtrees are within it
    int pick = -1;
    for (int r : big_roots) {
      stack.assign(1, r);
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        bool leaf_of_big = true;
        for (int j = ix.child_offset[v]; j < ix.child_offset[v + 1]; ++j) {
          const int c = ix.child[j];
          if (res.forest.parent[c] == v && ix.subtree[c] > threshold) {
            stack.push_back(c);
            leaf_of_big = false;
          }
        }
        if (leaf_of_big && (pick == -1 || v < pick)) pick = v;
      }
    }

    const std::int64_t removed = ix.subtree[pick] - 1;
    for (int j = ix.child_offset[pick]; j < ix.child_offset[pick + 1]; ++j) {
      const int c = ix.child[j];
      if (res.forest.parent[c] != pick) continue;  // already cut earlier
      res.forest.parent[c] = -1;
      res.cut_arcs.emplace_back(c, pick);
    }
    ix.subtree[pick] = 1;
    for (int w = res.forest.parent[pick]; w != -1; w = res.forest.parent[w])
      ix.subtree[w] -= removed;
    ++res.iterations;

    std::vector<int> still_big;
    for (int r : big_roots) {
      if (ix.subtree[r] > threshold) still_big.push_back(r);
    }
    big_roots.swap(still_big);
  }
  return res;
}

BlockPartition partition_blocks(const ArborescenceForest& forest, std::int64_t order_cap,
                                double block_exponent) {
  const int n = forest.n;
  if (n < 1) throw config_error("partition_blocks: empty forest");
  if (block_exponent <= 0.0 || block_exponent >= 1.0)
    throw config_error("partition_blocks: block exponent must lie in (0, 1)");

  const std::vector<int> root = forest.root_of();
  std::vector<std::int64_t> order(n, 0);
  for (int v = 0; v < n; ++v) ++order[root[v]];
  for (int v = 0; v < n; ++v) {
    if (forest.parent[v] == -1 && order[v] > order_cap)
      throw contract_violation("partition_blocks: arborescence of order " +
                               std::to_string(order[v]) + " exceeds cap " +
                               std::to_string(order_cap));
  }

  // arborescences in order of their smallest vertex (first appearance)
  std::vector<int> arbo_index(n, -1);
  std::vector<int> arbo_root;
  for (int v = 0; v < n; ++v) {
    if (arbo_index[root[v]] == -1) {
      arbo_index[root[v]] = static_cast<int>(arbo_root.size());
      arbo_root.push_back(root[v]);
    }
  }
  const int arbos = static_cast<int>(arbo_root.size());

  const double target = std::pow(static_cast<double>(n), block_exponent);
  int blocks_wanted = 1;
  while (static_cast<double>(blocks_wanted) * target < static_cast<double>(n) - 1e-9)
    ++blocks_wanted;

  // minimal prefix of arborescences reaching each multiple of target
  std::vector<int> cut(blocks_wanted + 1, arbos);
  cut[0] = 0;
  std::int64_t prefix = 0;
  int j = 1;
  for (int i = 0; i < arbos && j < blocks_wanted; ++i) {
    prefix += order[arbo_root[i]];
    while (j < blocks_wanted &&
           static_cast<double>(prefix) >= static_cast<double>(j) * target - 1e-9) {
      cut[j] = i + 1;
      ++j;
    }
  }

  BlockPartition part;
  part.n = n;
  part.block_of.assign(n, -1);
  std::vector<std::vector<int>> members(arbos);
  for (int v = 0; v < n; ++v) members[arbo_index[root[v]]].push_back(v);
  for (int b = 0; b < blocks_wanted; ++b) {
    std::vector<int> block;
    for (int i = cut[b]; i < cut[b + 1]; ++i) {
      block.insert(block.end(), members[i].begin(), members[i].end());
    }
    if (block.empty()) continue;  // short tail: fewer blocks than targeted
    const int id = part.block_count();
    for (int v : block) part.block_of[v] = id;
    part.blocks.push_back(std::move(block));
  }
  if (!part.valid()) throw contract_violation("partition_blocks: produced partition invalid");
  return part;
}

}  // namespace monocomp
