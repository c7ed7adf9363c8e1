#include "zfpoly/forcing.hpp"

#include <unordered_map>

#include "zfpoly/errors.hpp"
#include "zfpoly/kernels/kernels.hpp"

namespace zfp {

VertexSet closure(const Graph& g, VertexSet colored) {
  if (!colored.is_subset_of(g.vertices())) throw PreconditionError("initial set contains a non-vertex");
  return VertexSet(kernels::scalar::closure(g.adjacency(), colored.bits()));
}

bool is_zero_forcing_set(const Graph& g, VertexSet s) { return closure(g, s) == g.vertices(); }

ForceRecord chronological_forces(const Graph& g, VertexSet initial) {
  if (!initial.is_subset_of(g.vertices())) throw PreconditionError("initial set contains a non-vertex");
  ForceRecord record{initial, {}, initial};
  VertexSet& colored = record.closure;
  for (;;) {
    bool forced = false;
    // A forcer has exactly one candidate, so the smallest forcer gives the smallest pair.
    for (int u : colored) {
      const VertexSet uncolored = g.neighbors(u) - colored;
      if (uncolored.size() == 1) {
        record.forces.push_back({u, uncolored.front()});
        colored |= uncolored;
        forced = true;
        break;
      }
    }
    if (!forced) break;
  }
  return record;
}

bool replays(const Graph& g, const ForceRecord& record) {
  VertexSet colored = record.initial;
  for (auto [u, w] : record.forces) {
    if (u < 0 || w < 0 || u >= g.order() || w >= g.order()) return false;
    if (!colored.contains(u) || colored.contains(w)) return false;
    if (g.neighbors(u) - colored != VertexSet::single(w)) return false;
    colored.insert(w);
  }
  return colored == record.closure;
}

std::vector<std::vector<int>> forcing_chains(const ForceRecord& record) {
  std::unordered_map<int, int> next;
  for (auto [u, w] : record.forces) next[u] = w;
  std::vector<std::vector<int>> chains;
  for (int start : record.initial) {
    std::vector<int> chain{start};
    for (auto it = next.find(start); it != next.end(); it = next.find(chain.back())) chain.push_back(it->second);
    chains.push_back(std::move(chain));
  }
  return chains;
}

VertexSet terminal_vertices(const ForceRecord& record) {
  VertexSet out;
  for (const auto& chain : forcing_chains(record)) out.insert(chain.back());
  return out;
}

}  // namespace zfp
