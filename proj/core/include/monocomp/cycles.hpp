#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monocomp/multigraph.hpp"
#include "monocomp/rng.hpp"

namespace monocomp {

// A closed walk with no repeated vertex: length 1 is a loop, length 2 a pair
// of parallel edges, length >= 3 a simple cycle. edge_ids[i] joins
// vertices[i] and vertices[(i+1) % length].
struct Cycle {
  std::vector<int> vertices;
  std::vector<int> edge_ids;

  int length() const { return static_cast<int>(vertices.size()); }
};

bool is_valid_cycle(const MultiGraph& g, const Cycle& c);

struct LongCycleParams {
  std::int64_t budget = 0;  // total exploration steps; 0 means 50 * n
  int restarts = 10;
  Seed seed = 0;
};

// Randomized best-effort search for a long cycle: loop and parallel-edge
// scan, then restarted DFS keeping the deepest back-edge cycle, with
// rotation-extension on the deepest path. The result is re-verified edge by
// edge before being returned. nullopt when no cycle was found (e.g. forests).
std::optional<Cycle> find_long_cycle(const MultiGraph& g, const LongCycleParams& params = {});

// Exact longest cycle length (0 for acyclic graphs) by dynamic programming
// over vertex subsets. Refuses n > 15 with config_error.
int longest_cycle_exact(const MultiGraph& g);

}  // namespace monocomp
