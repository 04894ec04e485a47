#pragma once

#include <vector>

#include "monocomp/digraph.hpp"
#include "monocomp/hamilton.hpp"
#include "monocomp/multigraph.hpp"
#include "monocomp/rng.hpp"

namespace monocomp {

// Uniform pairing construction of a d-regular multigraph: n cells of d
// points, a uniform perfect matching on the points, cells contracted to
// vertices. Loops and parallel edges possible. Requires n >= 1, d >= 1,
// n*d even.
MultiGraph pairing_model(int n, int d, Seed seed);

// Rejection-samples pairing_model until the result is simple. Throws
// config_error when max_attempts is exhausted.
MultiGraph simple_regular(int n, int d, Seed seed, int max_attempts = 1000);

struct HamiltonSample {
  MultiGraph graph;  // 2r-regular; edge-id i*n + j joins cycle i's entries j, j+1 (mod n)
  HamiltonDecomposition decomposition;
};

// Sum of r independent uniform spanning cycles. Requires n >= 3, r >= 1.
HamiltonSample hamilton_sum(int n, int r, Seed seed);

struct KoutSample {
  MultiGraph graph;  // exactly k*n edges; edge-id i*n + v is digraph i's arc (v, succ[v])
  std::vector<FunctionalDigraph> digraphs;
};

// Sum of k independent uniform fixed-point-free functional digraphs, with
// orientation dropped. Requires n >= 2, k >= 1.
KoutSample kout_sum(int n, int k, Seed seed);

}  // namespace monocomp
