#pragma once

#include <set>
#include <span>
#include <string_view>
#include <vector>

#include "zfpoly/bigint.hpp"
#include "zfpoly/polynomial.hpp"
#include "zfpoly/threshold.hpp"

namespace zfp {

/// C(a, b), extended by zero whenever a < 0, b < 0 or b > a.
BigInt binom(long long a, long long b);

/// x^n + n x^(n-1); n = 1 gives x.
ZfPolynomial poly_complete(int n);

/// Complete multipartite graph with every part of size >= 2 and at least two parts.
ZfPolynomial poly_multipartite(std::span<const int> parts);

ZfPolynomial poly_path(int n);

/// n >= 3.
ZfPolynomial poly_cycle(int n);

/// Number of k-subsets of the n-cycle's vertices containing m cyclically consecutive vertices.
///
/// Inclusion-exclusion over the runs of length m for m <= k < n; the full vertex set
/// (k = n) counts once when n >= m, and k < m or k > n gives 0.
BigInt count_consecutive_selections(int n, int k, int m);

/// Wheel on n >= 5 vertices (hub plus rim C_{n-1}). W_4 = K_4 is served by poly_complete.
ZfPolynomial poly_wheel(int n);

/// A set of 1-based block indices.
using BlockIndexSet = std::vector<int>;

/// One (A, k) entry of the block-selection recursion: `blocks` are the blocks
/// missing one vertex, `one_block_pending` is set while an excluded 1-vertex has
/// no included 0-vertex to its right yet.
struct AlgoOneEntry {
  BlockIndexSet blocks;
  bool one_block_pending = false;
  auto operator<=>(const AlgoOneEntry&) const = default;
};
using AlgoOneState = std::set<AlgoOneEntry>;

/// All block-index sets A for which excluding one vertex from each block in A
/// leaves a zero forcing set of the threshold graph. Requires a canonical,
/// connected partition.
std::set<BlockIndexSet> algorithm_one(const BlockPartition& partition);

/// The state after processing blocks 1..s (s must index a 1-block).
AlgoOneState algorithm_one_state(const BlockPartition& partition, int s);

/// Polynomial of the threshold graph of a canonical connected string of length >= 2.
ZfPolynomial poly_threshold(std::string_view binary);

/// Block characterisation of threshold zero forcing sets: at most one vertex of each
/// block is missing, and between any two missing 1-vertices some 0-vertex is kept.
bool threshold_zfs_check(std::string_view binary, VertexSet s);

}  // namespace zfp
