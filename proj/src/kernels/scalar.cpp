#include "zfpoly/kernels/kernels.hpp"

#include <bit>
#include <cstddef>

namespace zfp::kernels::scalar {

std::uint64_t closure(std::span<const std::uint64_t> adj, std::uint64_t seed) noexcept {
  std::uint64_t colored = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint64_t rest = colored; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      const std::uint64_t uncolored = adj[static_cast<std::size_t>(u)] & ~colored;
      // exactly one uncolored neighbour
      if (uncolored != 0 && (uncolored & (uncolored - 1)) == 0) {
        colored |= uncolored;
        changed = true;
      }
    }
  }
  return colored;
}

bool is_fort(std::span<const std::uint64_t> adj, std::uint64_t set) noexcept {
  if (set == 0) return false;
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if ((set >> v) & 1U) continue;
    const std::uint64_t inside = adj[v] & set;
    if (inside != 0 && (inside & (inside - 1)) == 0) return false;
  }
  return true;
}

void closure_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out) noexcept {
  for (std::size_t i = 0; i < seeds.size(); ++i) out[i] = closure(adj, seeds[i]);
}

void fort_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out) noexcept {
  for (std::size_t i = 0; i < sets.size(); ++i) out[i] = is_fort(adj, sets[i]) ? 1 : 0;
}

}  // namespace zfp::kernels::scalar
