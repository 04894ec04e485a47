#pragma once

#include <vector>

namespace monocomp {

// Partition of [0, n) into consecutive blocks (in whatever order the
// producing algorithm used). Blocks are disjoint, non-empty, and cover the
// vertex set.
struct BlockPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of;  // vertex -> block index

  int block_count() const { return static_cast<int>(blocks.size()); }
  int max_block_size() const;
  bool valid() const;
};

}  // namespace monocomp
