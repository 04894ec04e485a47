#include "monocomp/block_partition.hpp"

#include <cstdint>

namespace monocomp {

int BlockPartition::max_block_size() const {
  std::size_t best = 0;
  for (const auto& b : blocks) best = b.size() > best ? b.size() : best;
  return static_cast<int>(best);
}

bool BlockPartition::valid() const {
  if (static_cast<int>(block_of.size()) != n) return false;
  std::vector<std::int64_t> counted(blocks.size(), 0);
  for (int v = 0; v < n; ++v) {
    if (block_of[v] < 0 || block_of[v] >= block_count()) return false;
    ++counted[block_of[v]];
  }
  for (int b = 0; b < block_count(); ++b) {
    if (blocks[b].empty()) return false;
    if (counted[b] != static_cast<std::int64_t>(blocks[b].size())) return false;
    for (int v : blocks[b]) {
      if (v < 0 || v >= n || block_of[v] != b) return false;
    }
  }
  return true;
}

}  // namespace monocomp
