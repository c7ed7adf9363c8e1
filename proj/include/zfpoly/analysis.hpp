#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zfpoly/bigint.hpp"
#include "zfpoly/graph.hpp"
#include "zfpoly/polynomial.hpp"

namespace zfp {

/// z(G;n), z(G;n-1), z(G;n-2) and z(G;1), each computed from graph structure
/// rather than by enumeration.
struct ExtremalCoefficients {
  BigInt top;
  BigInt second;
  BigInt third;
  BigInt bottom;
  bool operator==(const ExtremalCoefficients&) const = default;
};

ExtremalCoefficients extremal_coefficients(const Graph& g);

/// Structural path test: connected, maximum degree <= 2 and exactly two vertices of
/// degree <= 1 (or a single vertex).
bool is_path_graph(const Graph& g);

/// z(G;Z(G)) == C(n, Z(G)).
bool all_min_sets_forcing(const ZfPolynomial& p);
bool all_min_sets_forcing(const Graph& g, const EnumerationOptions& options = {});

/// z(G;i) <= z(G;i+1) for every 1 <= i < n/2.
bool hall_monotonicity_holds(const ZfPolynomial& p);
bool hall_monotonicity_holds(const Graph& g, const EnumerationOptions& options = {});

/// z(G;i) <= z(P_n;i) for every i (an open conjecture; this only probes it).
bool path_bound_holds(const ZfPolynomial& p);
bool path_bound_holds(const Graph& g, const EnumerationOptions& options = {});

bool recognizes_path(const ZfPolynomial& p);
bool recognizes_complete(const ZfPolynomial& p);

/// Isomorphism-class representatives on n vertices (3 <= n <= 7) sharing the
/// polynomial of C_n, in order of first appearance in the labelled sweep.
std::vector<Graph> cycle_polynomial_class(int n, unsigned jobs = 1);

/// Threshold strings whose 1-blocks have sizes 2..k in every order, separated by "00".
std::vector<std::string> threshold_permutation_strings(int k);

/// Each permutation string with its threshold polynomial; 3 <= k <= 5.
std::vector<std::pair<std::string, ZfPolynomial>> same_poly_threshold_family(int k);

}  // namespace zfp
