#include "monocomp/color_hamilton.hpp"

#include <cmath>
#include <string>

#include "monocomp/errors.hpp"

namespace monocomp {

HamiltonColoring color_hamilton(const HamiltonDecomposition& decomp, int r,
                                const HamiltonColoringParams& params) {
  const int n = decomp.n;
  if (r < 2) throw config_error("cycle-sum coloring needs r >= 2");
  if (decomp.r() != r)
    throw config_error("decomposition has " + std::to_string(decomp.r()) +
                       " cycles, expected " + std::to_string(r));
  if (n < 3 || n < r) throw config_error("cycle-sum coloring needs n >= max(3, r)");
  if (params.block_exponent <= 0.0 || params.block_exponent >= 1.0)
    throw config_error("block exponent must lie in (0, 1)");
  if (!decomp.valid()) throw config_error("decomposition cycles are not permutations");

  const auto& first = decomp.cycles[0];
  const double s = std::pow(static_cast<double>(n), params.block_exponent);

  // Positions along the first cycle are 1-based; block i covers positions
  // floor((i-1)*s)+1 .. floor(i*s), the last block is truncated at n.
  HamiltonColoring out;
  out.blocks.n = n;
  out.blocks.block_of.assign(n, -1);
  std::vector<char> is_estar(n, 0);
  std::int64_t lo = 0;  // floor((i-1)*s)
  for (int i = 1; lo < n; ++i) {
    auto hi = static_cast<std::int64_t>(std::floor(static_cast<double>(i) * s));
    if (hi > n) hi = n;
    if (hi <= lo) hi = lo + 1;  // guard: blocks always advance
    std::vector<int> block;
    block.reserve(hi - lo);
    for (std::int64_t p = lo + 1; p <= hi; ++p) {
      const int v = first[p - 1];
      out.blocks.block_of[v] = out.blocks.block_count();
      block.push_back(v);
    }
    out.blocks.blocks.push_back(std::move(block));
    // the first-cycle edge leaving the block's last position; for the final
    // block (hi == n) this is the wrap-around edge, id n-1
    is_estar[hi - 1] = 1;
    out.estar.push_back(static_cast<int>(hi - 1));
    lo = hi;
  }

  const auto m = static_cast<std::int64_t>(n) * r;
  out.coloring.colors = r;
  out.coloring.color.assign(m, 0);
  for (std::int64_t e = 0; e < m; ++e) {
    const int cyc = static_cast<int>(e / n);
    const int j = static_cast<int>(e % n);
    const int u = decomp.cycles[cyc][j];
    const int v = decomp.cycles[cyc][(j + 1) % n];
    int c;
    if (cyc == 0 && is_estar[j]) {
      c = 2;
    } else if (out.blocks.block_of[u] == out.blocks.block_of[v]) {
      c = 1;
    } else {
      c = cyc + 1;
      if (cyc == 0)
        throw contract_violation("first-cycle edge " + std::to_string(e) +
                                 " crosses blocks without being a boundary edge");
    }
    out.coloring.color[e] = c;
  }
  if (!out.blocks.valid()) throw contract_violation("block partition invalid");
  return out;
}

}  // namespace monocomp
