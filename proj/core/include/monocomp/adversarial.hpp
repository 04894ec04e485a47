#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monocomp/edge_coloring.hpp"
#include "monocomp/multigraph.hpp"
#include "monocomp/rng.hpp"

namespace monocomp {

enum class Strategy {
  uniform_random,    // i.i.d. color per edge
  greedy_balanced,   // assign each edge the color minimizing the merged component
  orientation_split, // orient along Euler circuits, hash the head vertex
};

const char* to_string(Strategy s);
std::optional<Strategy> strategy_from_string(std::string_view name);

struct AdversarialColoring {
  EdgeColoring coloring;
  Strategy requested = Strategy::uniform_random;
  bool fell_back = false;  // orientation_split on a graph with odd degrees
};

// Colors g with r colors trying to keep monochromatic components small.
// orientation_split falls back to greedy_balanced (with fell_back set) when
// some degree is odd.
AdversarialColoring adversarial_color(const MultiGraph& g, int r, Strategy strategy, Seed seed);

// The greedy pass underlying Strategy::greedy_balanced, exposed so its
// order-independence properties can be tested directly. edge_order must be
// a permutation of the edge-ids.
EdgeColoring greedy_balanced_coloring(const MultiGraph& g, int r,
                                      const std::vector<int>& edge_order);

}  // namespace monocomp
