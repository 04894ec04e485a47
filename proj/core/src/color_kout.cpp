#include "monocomp/color_kout.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "monocomp/errors.hpp"

namespace monocomp {

KoutColoring color_kout(const std::vector<FunctionalDigraph>& digraphs, int r,
                        const KoutColoringParams& params) {
  if (r < 2) throw config_error("digraph-sum coloring needs r >= 2");
  if (static_cast<int>(digraphs.size()) != r)
    throw config_error("got " + std::to_string(digraphs.size()) + " digraphs, expected " +
                       std::to_string(r));
  const int n = digraphs.front().n;
  if (n < 2) throw config_error("digraph-sum coloring needs n >= 2");
  for (const auto& d : digraphs) {
    if (d.n != n || !d.valid())
      throw config_error("digraphs must all be functional digraphs on the same vertex set");
  }
  if (params.block_exponent <= 0.0 || params.block_exponent >= 1.0 ||
      params.peel_exponent <= 0.0 || params.peel_exponent >= 1.0)
    throw config_error("exponents must lie in (0, 1)");
  if (params.peel_exponent >= params.block_exponent)
    throw config_error("peel exponent must be smaller than block exponent");

  KoutColoring out;
  out.peel_threshold = std::max<std::int64_t>(
      1, static_cast<std::int64_t>(std::floor(std::pow(n, params.peel_exponent))));

  StripResult strip = strip_cycles(digraphs[0]);
  PeelResult peel = peel_arborescences(strip.forest, out.peel_threshold);
  out.forest = std::move(peel.forest);
  out.peel_iterations = peel.iterations;
  out.blocks = partition_blocks(out.forest, out.peel_threshold, params.block_exponent);

  // first-digraph arcs recolored 2: one per cycle, plus every peeled cut
  std::vector<char> is_estar(n, 0);
  for (int src : strip.removed_arc_sources) is_estar[src] = 1;
  for (const auto& [child, parent] : peel.cut_arcs) {
    (void)parent;
    is_estar[child] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (is_estar[v]) out.estar.push_back(v);
  }

  const auto m = static_cast<std::int64_t>(n) * r;
  out.coloring.colors = r;
  out.coloring.color.assign(m, 0);
  for (std::int64_t e = 0; e < m; ++e) {
    const int dig = static_cast<int>(e / n);
    const int v = static_cast<int>(e % n);
    const int w = digraphs[dig].succ[v];
    int c;
    if (dig == 0 && is_estar[v]) {
      c = 2;
    } else if (out.blocks.block_of[v] == out.blocks.block_of[w]) {
      c = 1;
    } else {
      c = dig + 1;
      if (dig == 0)
        throw contract_violation("first-digraph arc " + std::to_string(e) +
                                 " crosses blocks without being stripped or peeled");
    }
    out.coloring.color[e] = c;
  }
  return out;
}

}  // namespace monocomp
