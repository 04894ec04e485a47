#pragma once

#include <cstdint>
#include <vector>

#include "monocomp/multigraph.hpp"

namespace monocomp {

struct DensityAudit {
  double c = 0.0;
  int smax = 0;
  double worst_ratio = 0.0;          // max over connected S of e(S)/|S|
  std::vector<int> witness;          // a set attaining worst_ratio, sorted
  std::int64_t sets_enumerated = 0;
  bool violation = false;            // worst_ratio > c
};

// Exhaustively enumerates every connected vertex set S with 1 <= |S| <= smax
// and checks e(S) <= c * |S|, where e(S) counts edges with both endpoints in
// S (loops once, parallel edges each). Throws contract_violation once more
// than `budget` sets would have to be enumerated — an explicit refusal, never
// a silent sample.
DensityAudit local_density_audit(const MultiGraph& g, double c, int smax,
                                 std::int64_t budget = 10'000'000);

}  // namespace monocomp
