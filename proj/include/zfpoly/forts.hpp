#pragma once

#include <optional>
#include <vector>

#include "json.hpp"
#include "zfpoly/bigint.hpp"
#include "zfpoly/graph.hpp"
#include "zfpoly/polynomial.hpp"

namespace zfp {

/// All forts of a graph, sorted by (size, bit pattern).
struct FortFamily {
  int n = 0;
  std::vector<VertexSet> forts;
};

/// Nonempty F such that no vertex outside F has exactly one neighbour in F.
bool is_fort(const Graph& g, VertexSet f);

/// Plain 2^n scan; every fort, not only the minimal ones.
FortFamily enumerate_forts(const Graph& g, const EnumerationOptions& options = {});

/// Forts with no proper subset that is also a fort.
std::vector<VertexSet> minimal_forts(const FortFamily& family);

struct FortCover {
  int size = 0;
  /// Lexicographically smallest (by sorted vertex list) among all minimum covers.
  VertexSet witness;
  /// Whether the witness happens to be a zero forcing set; recorded, not guaranteed.
  bool witness_is_zero_forcing = false;
};

/// Exact minimum vertex set meeting every fort (branch and bound over the hitting-set
/// formulation). Its size equals the zero forcing number.
FortCover min_fort_cover(const Graph& g, const EnumerationOptions& options = {});

/// Minimum hitting set of an explicit family of nonempty sets over n vertices.
FortCover min_hitting_set(int n, const std::vector<VertexSet>& sets);

struct FortCountBound {
  BigInt fort_count;
  /// 2^n - Z(G;1)
  BigInt bound;
  bool holds = false;
};

FortCountBound fort_count_bound(const Graph& g, const EnumerationOptions& options = {});

struct CoefficientBoundRow {
  int i = 0;
  BigInt coefficient;
  /// C(n,i) - C(n-i-1,i)
  BigInt bound;
  bool holds = false;
};

/// When some fort has at most Z(G)+1 vertices, compares every z(G;i) with the path
/// bound; std::nullopt when no such fort exists.
std::optional<std::vector<CoefficientBoundRow>> small_fort_coefficient_bound(const Graph& g,
                                                                            const FortFamily& forts,
                                                                            const ZfPolynomial& p);
std::optional<std::vector<CoefficientBoundRow>> small_fort_coefficient_bound(const Graph& g,
                                                                            const EnumerationOptions& options = {});

nlohmann::json to_json(const FortFamily& family);
nlohmann::json to_json(const FortCover& cover);

}  // namespace zfp
