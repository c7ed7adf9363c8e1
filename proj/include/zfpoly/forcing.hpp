#pragma once

#include <vector>

#include "zfpoly/graph.hpp"

namespace zfp {

struct Force {
  int forcer;
  int forced;
  auto operator<=>(const Force&) const = default;
};

/// A replayable run of the colour change rule from an initial set.
struct ForceRecord {
  VertexSet initial;
  std::vector<Force> forces;
  VertexSet closure;
};

/// Least fixpoint of the colour change rule containing `colored`.
VertexSet closure(const Graph& g, VertexSet colored);

bool is_zero_forcing_set(const Graph& g, VertexSet s);

/// Forces in application order. At every step the applicable force with the
/// smallest (forcer, forced) pair is taken.
ForceRecord chronological_forces(const Graph& g, VertexSet initial);

/// True iff each force is legal when replayed in order and `closure` matches.
bool replays(const Graph& g, const ForceRecord& record);

/// Maximal chains v1 -> v2 -> ... ordered by their initiating vertex. Initial
/// vertices that never force appear as single-vertex chains.
std::vector<std::vector<int>> forcing_chains(const ForceRecord& record);

/// Last vertex of every chain.
VertexSet terminal_vertices(const ForceRecord& record);

}  // namespace zfp
