#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zfpoly/vertex_set.hpp"

namespace zfp {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with n <= 64; one neighbour bitset per vertex.
///
/// Values are immutable once built. Every constructor validates symmetry,
/// irreflexivity and that no neighbour bit lies at or above n.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);
  /// Adopts an adjacency array; throws PreconditionError when it is not a simple graph.
  Graph(int n, std::vector<std::uint64_t> adjacency);

  int order() const noexcept { return n_; }
  VertexSet vertices() const noexcept { return VertexSet::first(n_); }
  VertexSet neighbors(int v) const noexcept { return VertexSet(adj_[static_cast<std::size_t>(v)]); }
  int degree(int v) const noexcept { return neighbors(v).size(); }
  bool has_edge(int u, int v) const noexcept { return neighbors(u).contains(v); }
  std::span<const std::uint64_t> adjacency() const noexcept { return adj_; }

  int edge_count() const noexcept;
  std::vector<Edge> edges() const;
  int min_degree() const noexcept;
  int max_degree() const noexcept;
  VertexSet isolated_vertices() const noexcept;
  bool is_complete() const noexcept { return 2 * edge_count() == n_ * (n_ - 1); }
  bool is_edgeless() const noexcept { return edge_count() == 0; }

  /// Subgraph induced on `keep`, relabelled 0..|keep|-1 in increasing vertex order.
  Graph induced_subgraph(VertexSet keep) const;

  bool operator==(const Graph&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

// ---- construction ---------------------------------------------------------

Graph from_edge_list(int n, std::span<const Edge> edges);
inline Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty_graph(int n);
/// Parts occupy consecutive labels in the given order.
Graph complete_multipartite(std::span<const int> parts);
/// Rim C_{n-1} on 0..n-2, hub n-1.
Graph wheel(int n);
/// K_{1,n-1} with centre 0.
Graph star(int n);
/// C_n plus the chord {i, j}; i and j must be distinct and non-adjacent on the cycle.
Graph cycle_plus_chord(int n, int i, int j);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph join(const Graph& a, const Graph& b);
/// (u, u') -> u * |V(b)| + u'
Graph cartesian_product(const Graph& a, const Graph& b);

// ---- serialization --------------------------------------------------------

/// Standard graph6 (optionally prefixed by ">>graph6<<"); trailing newline tolerated.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m" header, then m "u v" lines; '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
void write_edge_list(std::ostream& out, const Graph& g);

// ---- structure ------------------------------------------------------------

/// Maximal connected vertex sets ordered by minimum vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Permutation search with degree pruning; throws SizeCapError above 9 vertices.
bool is_isomorphic(const Graph& a, const Graph& b);
inline constexpr int kIsomorphismMaxVertices = 9;

/// Subset x endpoint dynamic program; throws SizeCapError above 24 vertices.
bool has_hamiltonian_path(const Graph& g);
inline constexpr int kHamiltonianMaxVertices = 24;

// ---- exhaustive labelled corpus -------------------------------------------

inline constexpr int kLabeledCorpusMaxVertices = 7;

/// Number of vertex pairs, i.e. the edge-code width for order n.
constexpr int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// Graph whose edge set is the bit pattern `code` over the pairs (0,1),(0,2),(1,2),(0,3),...
/// (column-major upper triangle, the graph6 bit order).
Graph graph_from_edge_code(int n, std::uint64_t code);

/// Every labelled graph on n vertices, one per edge code in [first, last).
/// Sub-ranges can be handed to different workers.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(int n);
  LabeledGraphs(int n, std::uint64_t first, std::uint64_t last);

  std::uint64_t size() const noexcept { return last_ - first_; }
  int order() const noexcept { return n_; }
  /// Slice [first + lo, first + hi) of this range.
  LabeledGraphs slice(std::uint64_t lo, std::uint64_t hi) const;

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(int n, std::uint64_t code) : n_(n), code_(code) {}
    Graph operator*() const { return graph_from_edge_code(n_, code_); }
    std::uint64_t code() const noexcept { return code_; }
    iterator& operator++() noexcept {
      ++code_;
      return *this;
    }
    iterator operator++(int) noexcept {
      iterator old = *this;
      ++code_;
      return old;
    }
    bool operator==(const iterator& o) const noexcept { return code_ == o.code_; }

   private:
    int n_ = 0;
    std::uint64_t code_ = 0;
  };

  iterator begin() const { return {n_, first_}; }
  iterator end() const { return {n_, last_}; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// All 2^(n(n-1)/2) labelled graphs on n <= 7 vertices.
LabeledGraphs all_labeled_graphs(int n);

}  // namespace zfp
