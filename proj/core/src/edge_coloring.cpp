#include "monocomp/edge_coloring.hpp"

#include <algorithm>
#include <sstream>

#include "monocomp/errors.hpp"

namespace monocomp {

bool EdgeColoring::total_for(const MultiGraph& g) const {
  if (static_cast<int>(color.size()) != g.edge_count()) return false;
  return std::all_of(color.begin(), color.end(),
                     [this](int c) { return c >= 1 && c <= colors; });
}

void require_total(const EdgeColoring& c, const MultiGraph& g) {
  if (static_cast<int>(c.color.size()) != g.edge_count())
    throw contract_violation("coloring covers " + std::to_string(c.color.size()) +
                             " edges, graph has " + std::to_string(g.edge_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    if (c.color[e] < 1 || c.color[e] > c.colors)
      throw contract_violation("edge " + std::to_string(e) + " has color " +
                               std::to_string(c.color[e]) + " outside 1.." +
                               std::to_string(c.colors));
  }
}

std::string write_coloring(const EdgeColoring& c) {
  std::ostringstream out;
  for (int col : c.color) out << col << '\n';
  return out.str();
}

EdgeColoring read_coloring(const std::string& text) {
  std::istringstream in(text);
  EdgeColoring c;
  int col = 0;
  while (in >> col) {
    if (col < 1) throw config_error("coloring text: colors must be >= 1");
    c.color.push_back(col);
    c.colors = std::max(c.colors, col);
  }
  if (!in.eof()) throw config_error("coloring text: non-integer entry");
  return c;
}

}  // namespace monocomp
