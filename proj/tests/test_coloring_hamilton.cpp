#include <doctest.h>

#include <cmath>
#include <set>
#include <vector>

#include "monocomp/color_hamilton.hpp"
#include "monocomp/errors.hpp"
#include "monocomp/generators.hpp"
#include "monocomp/mono_stats.hpp"
#include "monocomp/multigraph.hpp"
#include "monocomp/rng.hpp"

using namespace monocomp;

TEST_CASE("cycle-sum blocks cover the first cycle in consecutive runs") {
  // n = 27 with exponent 0.7: run length 27^0.7 ~ 10.04, so the prefix
  // boundaries land at 10 and 20 and the tail block has 7 vertices. The
  // recolored first-cycle edges are the two boundary edges plus the
  // wrap-around edge.
  const HamiltonSample hs = hamilton_sum(27, 2, 5);
  const HamiltonColoring hc = color_hamilton(hs.decomposition, 2);

  REQUIRE(hc.blocks.valid());
  REQUIRE(hc.blocks.block_count() == 3);
  CHECK(hc.blocks.blocks[0].size() == 10);
  CHECK(hc.blocks.blocks[1].size() == 10);
  CHECK(hc.blocks.blocks[2].size() == 7);
  CHECK(hc.estar == std::vector<int>{9, 19, 26});

  // Blocks are consecutive runs of the first cycle.
  const auto& cyc = hs.decomposition.cycles[0];
  int pos = 0;
  for (const auto& block : hc.blocks.blocks) {
    for (int v : block) CHECK(v == cyc[pos++]);
  }
  CHECK(pos == 27);
}

TEST_CASE("cycle-sum coloring rules per edge") {
  const int n = 200, r = 3;
  const HamiltonSample hs = hamilton_sum(n, r, 71);
  const HamiltonColoring hc = color_hamilton(hs.decomposition, r);
  REQUIRE(hc.coloring.total_for(hs.graph));
  CHECK(hc.coloring.colors == r);

  const std::set<int> estar(hc.estar.begin(), hc.estar.end());
  CHECK(estar.size() == static_cast<std::size_t>(hc.blocks.block_count()));
  for (int e : estar) {
    CHECK(e >= 0);
    CHECK(e < n);  // recolored edges always come from the first cycle
    CHECK(hc.coloring.color[e] == 2);
  }

  for (int e = 0; e < hs.graph.edge_count(); ++e) {
    const Edge& edge = hs.graph.edges[e];
    const bool same_block = hc.blocks.block_of[edge.u] == hc.blocks.block_of[edge.v];
    const int cycle_index = e / n;
    if (estar.count(e)) continue;
    if (same_block) {
      CHECK(hc.coloring.color[e] == 1);
    } else {
      CHECK(cycle_index >= 1);  // first-cycle edges never cross blocks off the boundary set
      CHECK(hc.coloring.color[e] == cycle_index + 1);
    }
  }
}

TEST_CASE("color-1 components stay inside one block and below the cap") {
  for (const Seed seed : {1ull, 2ull, 3ull}) {
    const int n = 500, r = 3;
    const HamiltonSample hs = hamilton_sum(n, r, seed);
    const HamiltonColoring hc = color_hamilton(hs.decomposition, r);

    const auto comps =
        components(hs.graph, [&](int e) { return hc.coloring.color[e] == 1; });
    const auto cap = static_cast<std::size_t>(std::ceil(std::pow(n, 0.7)));
    for (const auto& comp : comps) {
      CHECK(comp.size() <= cap);
      const int block = hc.blocks.block_of[comp.front()];
      for (int v : comp) CHECK(hc.blocks.block_of[v] == block);
    }

    const MonoStats ms = mono_stats(hs.graph, hc.coloring, r);
    CHECK(ms.per_color[0].max_component <= static_cast<int>(cap));
  }
}

TEST_CASE("within a block the first cycle keeps everything connected") {
  // Each block's vertices are consecutive along the first cycle and its
  // interior edges keep color 1, so every block is one color-1 component.
  const int n = 300;
  const HamiltonSample hs = hamilton_sum(n, 2, 13);
  const HamiltonColoring hc = color_hamilton(hs.decomposition, 2);
  const auto comps = components(hs.graph, [&](int e) { return hc.coloring.color[e] == 1; });
  // every block is contained in a single component, hence components
  // can only be as numerous as blocks
  CHECK(comps.size() <= static_cast<std::size_t>(hc.blocks.block_count()));
  std::vector<int> comp_of(n, -1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (int v : comps[i]) comp_of[v] = static_cast<int>(i);
  for (const auto& block : hc.blocks.blocks) {
    for (int v : block) CHECK(comp_of[v] == comp_of[block.front()]);
  }
}

TEST_CASE("cycle-sum coloring validates its inputs") {
  const HamiltonSample hs = hamilton_sum(30, 2, 9);
  CHECK_THROWS_AS((void)color_hamilton(hs.decomposition, 3), config_error);  // r mismatch
  CHECK_THROWS_AS((void)color_hamilton(hs.decomposition, 1), config_error);  // r too small

  HamiltonColoringParams bad;
  bad.block_exponent = 0.0;
  CHECK_THROWS_AS((void)color_hamilton(hs.decomposition, 2, bad), config_error);
  bad.block_exponent = 1.0;
  CHECK_THROWS_AS((void)color_hamilton(hs.decomposition, 2, bad), config_error);

  HamiltonDecomposition broken = hs.decomposition;
  broken.cycles[0][0] = broken.cycles[0][1];  // not a permutation
  CHECK_THROWS_AS((void)color_hamilton(broken, 2), config_error);
}

TEST_CASE("block exponent shifts the cap") {
  const int n = 400;
  const HamiltonSample hs = hamilton_sum(n, 2, 33);
  HamiltonColoringParams p;
  p.block_exponent = 0.5;
  const HamiltonColoring hc = color_hamilton(hs.decomposition, 2, p);
  const auto cap = static_cast<std::size_t>(std::ceil(std::pow(n, 0.5)));
  for (const auto& block : hc.blocks.blocks) CHECK(block.size() <= cap);
  const auto comps = components(hs.graph, [&](int e) { return hc.coloring.color[e] == 1; });
  for (const auto& comp : comps) CHECK(comp.size() <= cap);
}
