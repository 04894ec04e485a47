#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "monocomp/digraph.hpp"
#include "monocomp/errors.hpp"
#include "monocomp/generators.hpp"
#include "monocomp/rng.hpp"

using namespace monocomp;

namespace {

int count_loops(const MultiGraph& g) {
  int loops = 0;
  for (const Edge& e : g.edges) loops += (e.u == e.v);
  return loops;
}

// Exhaustive perfect-matching enumeration over n*d labeled points, point p
// living in cell p / d. Sums the loop count (same-cell pairs) over all
// matchings, for comparison against the sampler's mean.
void enumerate_matchings(std::vector<int>& pts, int d, int loops, long long& matchings,
                         long long& total_loops) {
  int first = -1;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i] >= 0) {
      first = static_cast<int>(i);
      break;
    }
  }
  if (first < 0) {
    ++matchings;
    total_loops += loops;
    return;
  }
  const int a = pts[first];
  pts[first] = -1;
  for (std::size_t j = first + 1; j < pts.size(); ++j) {
    if (pts[j] < 0) continue;
    const int b = pts[j];
    pts[j] = -1;
    enumerate_matchings(pts, d, loops + (a / d == b / d ? 1 : 0), matchings, total_loops);
    pts[j] = b;
  }
  pts[first] = a;
}

// Independent cycle counter for a functional digraph: a vertex is cyclic iff
// the forward walk re-enters it; cycles are then traced through succ.
int count_cycles_by_walking(const std::vector<int>& succ) {
  const int n = static_cast<int>(succ.size());
  std::vector<char> on_cycle(n, 0);
  for (int v = 0; v < n; ++v) {
    int x = v;
    for (int s = 0; s < 2 * n; ++s) x = succ[x];  // lands on a cycle
    int y = x;
    for (int s = 0; s <= 2 * n; ++s) {
      if (y == v) {
        on_cycle[v] = 1;
        break;
      }
      y = succ[y];
    }
  }
  int cycles = 0;
  std::vector<char> seen(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!on_cycle[v] || seen[v]) continue;
    ++cycles;
    int y = v;
    while (!seen[y]) {
      seen[y] = 1;
      y = succ[y];
    }
  }
  return cycles;
}

std::string canonical_cycle(const std::vector<int>& cyc) {
  const int n = static_cast<int>(cyc.size());
  int pos = 0;
  while (cyc[pos] != 0) ++pos;
  std::string fwd, rev;
  for (int i = 0; i < n; ++i) fwd += static_cast<char>('0' + cyc[(pos + i) % n]);
  for (int i = 0; i < n; ++i) rev += static_cast<char>('0' + cyc[(pos + n - i) % n]);
  return std::min(fwd, rev);
}

}  // namespace

TEST_CASE("pairing model matches the exact matching-space loop mean") {
  // All 11!! = 10395 matchings of 12 points in 4 cells of 3: the loop total
  // is 11340, i.e. a mean of 12/11 loops per graph.
  std::vector<int> pts(12);
  std::iota(pts.begin(), pts.end(), 0);
  long long matchings = 0, total_loops = 0;
  enumerate_matchings(pts, 3, 0, matchings, total_loops);
  REQUIRE(matchings == 10395);
  REQUIRE(total_loops * 11 == matchings * 12);  // exact rational identity
  REQUIRE(total_loops == 11340);

  // Sampled mean must sit near 12/11; with 20000 draws the standard error
  // is about 0.007, so +-0.05 leaves a wide margin while still pinning the
  // first decimal.
  long long sampled_loops = 0;
  const int draws = 20000;
  for (int t = 0; t < draws; ++t) {
    const MultiGraph g = pairing_model(4, 3, derive_seed(11, 4, t));
    CHECK(g.edge_count() == 6);
    sampled_loops += count_loops(g);
  }
  const double mean = static_cast<double>(sampled_loops) / draws;
  CHECK(mean == doctest::Approx(12.0 / 11.0).epsilon(0.05));
}

TEST_CASE("pairing model degrees and input validation") {
  const MultiGraph g = pairing_model(50, 4, 7);
  CHECK(g.n == 50);
  CHECK(g.edge_count() == 100);
  for (int deg : degree_sequence(g)) CHECK(deg == 4);

  CHECK_THROWS_AS((void)pairing_model(3, 3, 1), config_error);  // nd odd
  CHECK_THROWS_AS((void)pairing_model(0, 2, 1), config_error);
  CHECK_THROWS_AS((void)pairing_model(4, 0, 1), config_error);
}

TEST_CASE("pairing model is reproducible by seed") {
  const MultiGraph a = pairing_model(30, 3, 99);
  const MultiGraph b = pairing_model(30, 3, 99);
  REQUIRE(a.edge_count() == b.edge_count());
  for (int e = 0; e < a.edge_count(); ++e) {
    CHECK(a.edges[e].u == b.edges[e].u);
    CHECK(a.edges[e].v == b.edges[e].v);
  }
  const MultiGraph c = pairing_model(30, 3, 100);
  bool differs = false;
  for (int e = 0; e < a.edge_count() && !differs; ++e)
    differs = a.edges[e].u != c.edges[e].u || a.edges[e].v != c.edges[e].v;
  CHECK(differs);
}

TEST_CASE("simple_regular rejects loops and parallels, K4 is forced") {
  const MultiGraph g = simple_regular(10, 3, 5);
  for (int deg : degree_sequence(g)) CHECK(deg == 3);
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    CHECK(e.u != e.v);
    CHECK(seen.insert({std::min(e.u, e.v), std::max(e.u, e.v)}).second);
  }

  // The only simple 3-regular graph on 4 vertices is the complete one.
  const MultiGraph k4 = simple_regular(4, 3, 21);
  REQUIRE(k4.edge_count() == 6);
  std::set<std::pair<int, int>> pairs;
  for (const Edge& e : k4.edges) pairs.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  CHECK(pairs.size() == 6);
}

TEST_CASE("cycle sums expose the cycles and lay edges out per cycle") {
  const HamiltonSample hs = hamilton_sum(40, 3, 17);
  REQUIRE(hs.decomposition.valid());
  REQUIRE(hs.decomposition.r() == 3);
  CHECK(hs.graph.n == 40);
  REQUIRE(hs.graph.edge_count() == 3 * 40);
  for (int i = 0; i < 3; ++i) {
    const auto& cyc = hs.decomposition.cycles[i];
    for (int j = 0; j < 40; ++j) {
      const Edge& e = hs.graph.edges[i * 40 + j];
      CHECK(e.u == cyc[j]);
      CHECK(e.v == cyc[(j + 1) % 40]);
    }
  }
  for (int deg : degree_sequence(hs.graph)) CHECK(deg == 6);

  CHECK_THROWS_AS((void)hamilton_sum(2, 1, 1), config_error);
  CHECK_THROWS_AS((void)hamilton_sum(5, 0, 1), config_error);
}

TEST_CASE("spanning cycles are sampled uniformly") {
  // On 4 vertices there are exactly 3 undirected spanning cycles. 9000
  // draws put each bucket at 3000 +- ~45 one-sigma; +-250 is over 5 sigma.
  std::map<std::string, int> buckets;
  for (int t = 0; t < 9000; ++t) {
    const HamiltonSample hs = hamilton_sum(4, 1, derive_seed(99, 4, t));
    buckets[canonical_cycle(hs.decomposition.cycles[0])]++;
  }
  REQUIRE(buckets.size() == 3);
  for (const auto& [shape, count] : buckets) {
    CAPTURE(shape);
    CHECK(count > 2750);
    CHECK(count < 3250);
  }
}

TEST_CASE("digraph sums match the exact function-space cycle census") {
  // All 81 fixed-point-free functions on 4 vertices carry 84 directed
  // cycles in total; find_cycles must agree with an independent walker on
  // every single one.
  long long funcs = 0, total_cycles = 0;
  std::vector<int> succ(4);
  for (succ[0] = 0; succ[0] < 4; ++succ[0])
    for (succ[1] = 0; succ[1] < 4; ++succ[1])
      for (succ[2] = 0; succ[2] < 4; ++succ[2])
        for (succ[3] = 0; succ[3] < 4; ++succ[3]) {
          bool fixed_point = false;
          for (int v = 0; v < 4; ++v) fixed_point |= succ[v] == v;
          if (fixed_point) continue;
          ++funcs;
          const int expected = count_cycles_by_walking(succ);
          total_cycles += expected;
          const FunctionalDigraph d{4, succ};
          REQUIRE(d.valid());
          const auto cycles = find_cycles(d);
          CHECK(static_cast<int>(cycles.size()) == expected);
          for (const auto& cyc : cycles) {
            CHECK(cyc[0] == *std::min_element(cyc.begin(), cyc.end()));
            for (std::size_t i = 0; i < cyc.size(); ++i)
              CHECK(succ[cyc[i]] == cyc[(i + 1) % cyc.size()]);
          }
        }
  CHECK(funcs == 81);
  CHECK(total_cycles == 84);
}

TEST_CASE("digraph sums lay arcs out per digraph with no fixed points") {
  const KoutSample ks = kout_sum(60, 3, 23);
  REQUIRE(ks.digraphs.size() == 3);
  REQUIRE(ks.graph.edge_count() == 3 * 60);
  for (int i = 0; i < 3; ++i) {
    REQUIRE(ks.digraphs[i].valid());
    for (int v = 0; v < 60; ++v) {
      const Edge& e = ks.graph.edges[i * 60 + v];
      CHECK(e.u == v);
      CHECK(e.v == ks.digraphs[i].succ[v]);
      CHECK(e.u != e.v);
    }
  }

  // Two vertices force succ(0) = 1 and succ(1) = 0: a double edge.
  const KoutSample tiny = kout_sum(2, 1, 3);
  REQUIRE(tiny.graph.edge_count() == 2);
  CHECK(tiny.graph.edges[0].u == 0);
  CHECK(tiny.graph.edges[0].v == 1);
  CHECK(tiny.graph.edges[1].u == 1);
  CHECK(tiny.graph.edges[1].v == 0);

  CHECK_THROWS_AS((void)kout_sum(1, 1, 1), config_error);
  CHECK_THROWS_AS((void)kout_sum(5, 0, 1), config_error);
}

TEST_CASE("digraph cycle counts grow logarithmically") {
  // Around (1/2) log n cycles per digraph is the expected order; at
  // n = 1000 that is ~3.5, so [1, 12] is a loose but meaningful corridor.
  for (int t = 0; t < 10; ++t) {
    const KoutSample ks = kout_sum(1000, 1, derive_seed(7, 1000, t));
    const auto cycles = find_cycles(ks.digraphs[0]);
    CHECK(cycles.size() >= 1);
    CHECK(cycles.size() <= 12);
  }
}
