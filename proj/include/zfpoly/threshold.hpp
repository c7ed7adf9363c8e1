#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zfpoly/graph.hpp"

namespace zfp {

struct Block {
  char symbol;  // '0' or '1'
  int length;
  bool operator==(const Block&) const = default;
};

/// Maximal runs of a binary string.
struct BlockPartition {
  std::string source;
  std::vector<Block> blocks;
  /// First two symbols equal (or a single block).
  bool canonical = false;
  /// Last block is a 1-block, i.e. the threshold graph is connected.
  bool connected = false;

  int block_count() const noexcept { return static_cast<int>(blocks.size()); }
  /// 1-based block index, matching the usual B_1 ... B_t numbering.
  const Block& block(int index) const { return blocks.at(static_cast<std::size_t>(index - 1)); }
  /// First string position covered by 1-based block `index`.
  int block_start(int index) const;
};

/// Run-length decomposition; throws ParseError on an empty string or a character other than 0/1.
BlockPartition block_partition(std::string_view binary);

/// Vertex k per symbol; for j < k, {j,k} is an edge iff symbol k is '1'.
Graph threshold_from_string(std::string_view binary);

}  // namespace zfp
