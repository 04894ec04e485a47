#pragma once

namespace monocomp {

// Largest delta (as a fraction of n) such that, with high probability, every
// vertex set S of a d-regular pairing-model graph with |S| <= delta * n
// spans at most c * |S| edges. Requires d > c > 1.
double sparseness_delta(double d, double c);

struct CycleBound {
  double value = 0.0;             // (k/2 - 1) * (sqrt(c1/c2) - 1)
  bool hypothesis_holds = false;  // value >= 2, i.e. the bound is usable
};

// Cycle length guaranteed in any graph whose k-vertex subsets all span
// fewer than c1*k edges while the graph as a whole has at least c2 edges
// per vertex. hypothesis_holds records whether the bound reaches the regime
// where it says anything (value >= 2); callers treat false as a status, not
// an error.
CycleBound long_cycle_bound(double c1, double c2, double k);

struct CycleLawConstants {
  int r = 0;
  int degree = 0;  // regular model: 2r+1; digraph-sum model: out-degree r+1
  double c1 = 0.0;
  double c2 = 0.0;
  double delta = 0.0;  // sparseness_delta(degree, c2): sets of at most
                       // delta*n vertices span at most c2*|S| edges whp

  // Cycle length guaranteed in the densest color class once n is large
  // enough: (delta*n/2 - 1) * (sqrt(c1/c2) - 1).
  double guaranteed_length(double n) const;
};

// Constants for an adversarially r-colored (2r+1)-regular graph.
CycleLawConstants regular_cycle_constants(int r);
// Constants for an adversarially r-colored sum of r+1 functional digraphs.
CycleLawConstants kout_cycle_constants(int r);

}  // namespace monocomp
