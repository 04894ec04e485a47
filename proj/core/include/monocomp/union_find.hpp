#pragma once

#include <numeric>
#include <vector>

namespace monocomp {

struct UnionFind {
  std::vector<int> parent;
  std::vector<int> size;
  int components = 0;

  explicit UnionFind(int n = 0) { reset(n); }

  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
    size.assign(n, 1);
    components = n;
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Returns false if x and y were already connected.
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size[rx] < size[ry]) std::swap(rx, ry);
    parent[ry] = rx;
    size[rx] += size[ry];
    --components;
    return true;
  }

  int component_size(int x) { return size[find(x)]; }
};

}  // namespace monocomp
