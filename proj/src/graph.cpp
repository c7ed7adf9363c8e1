#include "zfpoly/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

#include "zfpoly/errors.hpp"

namespace zfp {

namespace {

void check_order(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > kMaxVertices) {
    throw SizeCapError("graph has " + std::to_string(n) + " vertices; the cap is " +
                       std::to_string(kMaxVertices));
  }
}

void add_edge(std::vector<std::uint64_t>& adj, int u, int v) {
  adj[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_order(n);
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::vector<std::uint64_t> adjacency) : n_(n), adj_(std::move(adjacency)) {
  check_order(n);
  if (adj_.size() != static_cast<std::size_t>(n)) {
    throw PreconditionError("adjacency array length does not match vertex count");
  }
  const std::uint64_t in_range = low_mask(n);
  for (int u = 0; u < n; ++u) {
    const std::uint64_t row = adj_[static_cast<std::size_t>(u)];
    if (row & ~in_range) throw PreconditionError("neighbour index out of range");
    if ((row >> u) & 1U) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    for (int v : VertexSet(row)) {
      if (!((adj_[static_cast<std::size_t>(v)] >> u) & 1U)) {
        throw PreconditionError("adjacency is not symmetric");
      }
    }
  }
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

int Graph::min_degree() const noexcept {
  int best = n_ == 0 ? 0 : n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

VertexSet Graph::isolated_vertices() const noexcept {
  VertexSet out;
  for (int v = 0; v < n_; ++v) {
    if (adj_[static_cast<std::size_t>(v)] == 0) out.insert(v);
  }
  return out;
}

Graph Graph::induced_subgraph(VertexSet keep) const {
  keep &= vertices();
  std::vector<int> relabel(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v : keep) relabel[static_cast<std::size_t>(v)] = next++;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(next), 0);
  for (int v : keep) {
    std::uint64_t row = 0;
    for (int w : neighbors(v) & keep) row |= std::uint64_t{1} << relabel[static_cast<std::size_t>(w)];
    adj[static_cast<std::size_t>(relabel[static_cast<std::size_t>(v)])] = row;
  }
  return Graph(next, std::move(adj));
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
    }
    if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
    add_edge(adj, u, v);
  }
  return Graph(n, std::move(adj));
}

Graph path(int n) {
  if (n < 1) throw PreconditionError("path requires n >= 1");
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v + 1 < n; ++v) add_edge(adj, v, v + 1);
  return Graph(n, std::move(adj));
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("cycle requires n >= 3");
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) add_edge(adj, v, (v + 1) % n);
  return Graph(n, std::move(adj));
}

Graph complete(int n) {
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = low_mask(n) & ~(std::uint64_t{1} << v);
  return Graph(n, std::move(adj));
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete_multipartite(std::span<const int> parts) {
  int n = 0;
  for (int p : parts) {
    if (p < 0) throw PreconditionError("negative part size");
    n += p;
  }
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int start = 0;
  for (int p : parts) {
    const std::uint64_t part_mask = low_mask(start + p) & ~low_mask(start);
    for (int v = start; v < start + p; ++v) adj[static_cast<std::size_t>(v)] = low_mask(n) & ~part_mask;
    start += p;
  }
  return Graph(n, std::move(adj));
}

Graph wheel(int n) {
  if (n < 4) throw PreconditionError("wheel requires n >= 4");
  return join(cycle(n - 1), complete(1));
}

Graph star(int n) {
  if (n < 1) throw PreconditionError("star requires n >= 1");
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 1; v < n; ++v) add_edge(adj, 0, v);
  return Graph(n, std::move(adj));
}

Graph cycle_plus_chord(int n, int i, int j) {
  if (n < 4) throw PreconditionError("cycle with chord requires n >= 4");
  if (i < 0 || j < 0 || i >= n || j >= n) throw PreconditionError("chord endpoint out of range");
  const int gap = (i - j + n) % n;
  if (gap == 0 || gap == 1 || gap == n - 1) {
    throw PreconditionError("chord endpoints must be distinct and non-adjacent on the cycle");
  }
  Graph c = cycle(n);
  std::vector<std::uint64_t> adj(c.adjacency().begin(), c.adjacency().end());
  add_edge(adj, i, j);
  return Graph(n, std::move(adj));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  check_order(n);
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < na; ++v) adj[static_cast<std::size_t>(v)] = a.adjacency()[static_cast<std::size_t>(v)];
  for (int v = 0; v < b.order(); ++v) {
    adj[static_cast<std::size_t>(na + v)] = b.adjacency()[static_cast<std::size_t>(v)] << na;
  }
  return Graph(n, std::move(adj));
}

Graph join(const Graph& a, const Graph& b) {
  Graph u = disjoint_union(a, b);
  const int na = a.order();
  const int n = u.order();
  const std::uint64_t left = low_mask(na);
  const std::uint64_t right = low_mask(n) & ~left;
  std::vector<std::uint64_t> adj(u.adjacency().begin(), u.adjacency().end());
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] |= v < na ? right : left;
  return Graph(n, std::move(adj));
}

Graph cartesian_product(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int nb = b.order();
  check_order(na * nb);
  std::vector<Edge> edges;
  for (int u = 0; u < na; ++u) {
    for (int x = 0; x < nb; ++x) {
      const int id = u * nb + x;
      for (int y : b.neighbors(x)) {
        if (x < y) edges.emplace_back(id, u * nb + y);
      }
      for (int w : a.neighbors(u)) {
        if (u < w) edges.emplace_back(id, w * nb + x);
      }
    }
  }
  return from_edge_list(na * nb, edges);
}

// ---- graph6 ---------------------------------------------------------------

Graph from_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte outside the printable range 63..126");
  }

  auto value = [&](std::size_t i) { return static_cast<std::uint64_t>(text[i] - 63); };
  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated order field");
    n = (value(1) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated order field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(i);
    pos = 8;
  }
  if (n > static_cast<std::uint64_t>(kMaxVertices)) {
    throw SizeCapError("graph6: order " + std::to_string(n) + " exceeds the cap of " +
                       std::to_string(kMaxVertices));
  }

  const int order = static_cast<int>(n);
  const std::size_t bit_count = static_cast<std::size_t>(pair_count(order));
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError("graph6: expected " + std::to_string(byte_count) + " edge bytes, found " +
                     std::to_string(text.size() - pos));
  }

  std::vector<std::uint64_t> adj(static_cast<std::size_t>(order), 0);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::uint64_t byte = value(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1U) add_edge(adj, i, j);
    }
  }
  for (; k < byte_count * 6; ++k) {
    if ((value(pos + k / 6) >> (5 - k % 6)) & 1U) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph(order, std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---- edge lists -----------------------------------------------------------

namespace {

std::vector<long long> integers_on_line(std::string_view line, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    long long v = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + j;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected an integer, got '" +
                       std::string(first, last) + "'");
    }
    out.push_back(v);
    i = j;
  }
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto fields = integers_on_line(line, line_no);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two integers");
    }
    if (!have_header) {
      n = fields[0];
      m = fields[1];
      if (n < 0 || m < 0) throw ParseError("edge list header: negative count");
      if (n > kMaxVertices) {
        throw SizeCapError("edge list declares " + std::to_string(n) + " vertices; the cap is " +
                           std::to_string(kMaxVertices));
      }
      have_header = true;
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": more edges than declared");
    }
    const long long u = fields[0];
    const long long v = fields[1];
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": endpoint out of range");
    }
    if (u == v) throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (!have_header) throw ParseError("edge list: missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("edge list: declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return from_edge_list(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
}

// ---- structure ------------------------------------------------------------

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp = VertexSet::single(unseen.front());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen = unseen - comp;
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

namespace {

struct IsoSearch {
  const Graph& a;
  const Graph& b;
  std::vector<int> order;  // a-vertices in the order they are mapped
  std::vector<int> image;  // a-vertex -> b-vertex
  std::uint64_t used = 0;

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    for (int w = 0; w < b.order(); ++w) {
      if ((used >> w) & 1U) continue;
      if (a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const int u = order[d];
        ok = a.has_edge(u, v) == b.has_edge(image[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(v)] = w;
      used |= std::uint64_t{1} << w;
      if (extend(depth + 1)) return true;
      used &= ~(std::uint64_t{1} << w);
    }
    return false;
  }
};

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kIsomorphismMaxVertices || b.order() > kIsomorphismMaxVertices) {
    throw SizeCapError("is_isomorphic supports at most " + std::to_string(kIsomorphismMaxVertices) +
                       " vertices");
  }
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.order(); ++v) {
    da.push_back(a.degree(v));
    db.push_back(b.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;

  IsoSearch search{a, b, {}, std::vector<int>(static_cast<std::size_t>(a.order()), -1)};
  // Highest-degree vertices first constrain the search earliest.
  search.order.resize(static_cast<std::size_t>(a.order()));
  std::iota(search.order.begin(), search.order.end(), 0);
  std::stable_sort(search.order.begin(), search.order.end(),
                   [&](int x, int y) { return a.degree(x) > a.degree(y); });
  return search.extend(0);
}

bool has_hamiltonian_path(const Graph& g) {
  const int n = g.order();
  if (n > kHamiltonianMaxVertices) {
    throw SizeCapError("has_hamiltonian_path supports at most " +
                       std::to_string(kHamiltonianMaxVertices) + " vertices");
  }
  if (n <= 1) return true;
  // ends[mask]: endpoints v such that some path visits exactly `mask` and ends at v.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;
  const std::uint64_t full = low_mask(n);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    const std::uint32_t e = ends[mask];
    if (e == 0) continue;
    if (mask == full) return true;
    for (int v : VertexSet(e)) {
      for (int w : g.neighbors(v) - VertexSet(mask)) ends[mask | (std::uint64_t{1} << w)] |= std::uint32_t{1} << w;
    }
  }
  return false;
}

// ---- labelled corpus ------------------------------------------------------

Graph graph_from_edge_code(int n, std::uint64_t code) {
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if ((code >> k) & 1U) add_edge(adj, i, j);
    }
  }
  return Graph(n, std::move(adj));
}

LabeledGraphs::LabeledGraphs(int n) : LabeledGraphs(n, 0, std::uint64_t{1} << pair_count(std::max(n, 0))) {}

LabeledGraphs::LabeledGraphs(int n, std::uint64_t first, std::uint64_t last) : n_(n), first_(first), last_(last) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (n > kLabeledCorpusMaxVertices) {
    throw SizeCapError("labelled graph corpus supports at most " + std::to_string(kLabeledCorpusMaxVertices) +
                       " vertices");
  }
  const std::uint64_t total = std::uint64_t{1} << pair_count(n);
  if (first > last || last > total) throw PreconditionError("edge-code range out of bounds");
}

LabeledGraphs LabeledGraphs::slice(std::uint64_t lo, std::uint64_t hi) const {
  return LabeledGraphs(n_, first_ + std::min(lo, size()), first_ + std::min(hi, size()));
}

LabeledGraphs all_labeled_graphs(int n) { return LabeledGraphs(n); }

}  // namespace zfp
