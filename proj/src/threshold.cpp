#include "zfpoly/threshold.hpp"

#include "zfpoly/errors.hpp"

namespace zfp {

namespace {

void check_binary(std::string_view binary) {
  if (binary.empty()) throw ParseError("binary string is empty");
  for (char c : binary) {
    if (c != '0' && c != '1') throw ParseError(std::string("illegal character '") + c + "' in binary string");
  }
}

}  // namespace

int BlockPartition::block_start(int index) const {
  int start = 0;
  for (int i = 1; i < index; ++i) start += block(i).length;
  return start;
}

BlockPartition block_partition(std::string_view binary) {
  check_binary(binary);
  BlockPartition out;
  out.source = std::string(binary);
  for (char c : binary) {
    if (!out.blocks.empty() && out.blocks.back().symbol == c) {
      ++out.blocks.back().length;
    } else {
      out.blocks.push_back({c, 1});
    }
  }
  out.canonical = out.blocks.size() == 1 || out.blocks.front().length >= 2;
  out.connected = out.blocks.back().symbol == '1';
  return out;
}

Graph threshold_from_string(std::string_view binary) {
  check_binary(binary);
  const int n = static_cast<int>(binary.size());
  if (n > kMaxVertices) throw SizeCapError("threshold string longer than the vertex cap");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int k = 1; k < n; ++k) {
    if (binary[static_cast<std::size_t>(k)] != '1') continue;
    adj[static_cast<std::size_t>(k)] |= low_mask(k);
    for (int j = 0; j < k; ++j) adj[static_cast<std::size_t>(j)] |= std::uint64_t{1} << k;
  }
  return Graph(n, std::move(adj));
}

}  // namespace zfp
