#pragma once

#include <string>
#include <vector>

#include "oracle.hpp"
#include "zfpoly/graph.hpp"
#include "zfpoly/polynomial.hpp"

namespace support {

inline zfp::Graph to_graph(const oracle::Matrix& m) {
  std::vector<zfp::Edge> edges;
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v)
      if (m.adj[u][v]) edges.emplace_back(u, v);
  return zfp::from_edge_list(m.n, edges);
}

inline oracle::Matrix to_matrix(const zfp::Graph& g) {
  oracle::Matrix m(g.order());
  for (auto [u, v] : g.edges()) m.add(u, v);
  return m;
}

inline zfp::ZfPolynomial poly(std::vector<int> coeffs) {
  std::vector<zfp::BigInt> c(coeffs.begin(), coeffs.end());
  return zfp::ZfPolynomial(std::move(c));
}

inline zfp::ZfPolynomial from_counts(const std::vector<std::uint64_t>& coeffs) {
  std::vector<zfp::BigInt> c(coeffs.begin(), coeffs.end());
  return zfp::ZfPolynomial(std::move(c));
}

}  // namespace support
