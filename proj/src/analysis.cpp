#include "zfpoly/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "parallel.hpp"
#include "zfpoly/closed_forms.hpp"
#include "zfpoly/errors.hpp"

namespace zfp {

ExtremalCoefficients extremal_coefficients(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw PreconditionError("extremal coefficients need n >= 1");
  const VertexSet active = g.vertices() - g.isolated_vertices();

  int distinguishable_pairs = 0;
  for (int u : active) {
    for (int v : active) {
      if (v <= u) continue;
      const VertexSet nu = g.neighbors(u) - VertexSet::single(v);
      const VertexSet nv = g.neighbors(v) - VertexSet::single(u);
      if (nu != nv) ++distinguishable_pairs;
    }
  }

  int bottom = 0;
  if (is_path_graph(g)) bottom = n == 1 ? 1 : 2;
  return {BigInt(1), BigInt(active.size()), BigInt(distinguishable_pairs), BigInt(bottom)};
}

bool is_path_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) return false;
  if (n == 1) return true;
  if (!is_connected(g) || g.max_degree() > 2) return false;
  int ends = 0;
  for (int v = 0; v < n; ++v) ends += g.degree(v) <= 1 ? 1 : 0;
  return ends == 2;
}

bool all_min_sets_forcing(const ZfPolynomial& p) {
  const int z = zero_forcing_number(p);
  return p.coeff(z) == binom(p.order(), z);
}

bool all_min_sets_forcing(const Graph& g, const EnumerationOptions& options) {
  return all_min_sets_forcing(zf_polynomial(g, options));
}

bool hall_monotonicity_holds(const ZfPolynomial& p) {
  const int n = p.order();
  for (int i = 1; 2 * i < n; ++i) {
    if (p.coeff(i) > p.coeff(i + 1)) return false;
  }
  return true;
}

bool hall_monotonicity_holds(const Graph& g, const EnumerationOptions& options) {
  return hall_monotonicity_holds(zf_polynomial(g, options));
}

bool path_bound_holds(const ZfPolynomial& p) {
  if (p.order() < 1) return true;
  const ZfPolynomial reference = poly_path(p.order());
  for (int i = 0; i <= p.order(); ++i) {
    if (p.coeff(i) > reference.coeff(i)) return false;
  }
  return true;
}

bool path_bound_holds(const Graph& g, const EnumerationOptions& options) {
  return path_bound_holds(zf_polynomial(g, options));
}

bool recognizes_path(const ZfPolynomial& p) { return p.order() >= 1 && p == poly_path(p.order()); }

bool recognizes_complete(const ZfPolynomial& p) { return p.order() >= 1 && p == poly_complete(p.order()); }

std::vector<Graph> cycle_polynomial_class(int n, unsigned jobs) {
  if (n < 3 || n > kLabeledCorpusMaxVertices) {
    throw PreconditionError("cycle_polynomial_class supports 3 <= n <= " + std::to_string(kLabeledCorpusMaxVertices));
  }
  const ZfPolynomial cycle_poly = poly_cycle(n);
  std::vector<std::uint64_t> target;
  for (const BigInt& c : cycle_poly.coefficients()) target.push_back(static_cast<std::uint64_t>(c));
  const LabeledGraphs corpus = all_labeled_graphs(n);
  const EnumerationOptions single{kDefaultEnumerationCap, 1};

  const unsigned workers = detail::resolve_jobs(jobs);
  std::vector<std::vector<std::pair<std::uint64_t, Graph>>> hits(workers);
  detail::parallel_strides(corpus.size(), workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    const LabeledGraphs part = corpus.slice(begin, end);
    for (auto it = part.begin(); it != part.end(); ++it) {
      Graph g = *it;
      if (zero_forcing_counts(g, single) == target) hits[w].emplace_back(it.code(), std::move(g));
    }
  });

  std::vector<Graph> classes;
  for (const auto& local : hits) {
    for (const auto& [code, g] : local) {
      const bool seen = std::any_of(classes.begin(), classes.end(), [&](const Graph& r) { return is_isomorphic(r, g); });
      if (!seen) classes.push_back(g);
    }
  }
  return classes;
}

std::vector<std::string> threshold_permutation_strings(int k) {
  if (k < 3) throw PreconditionError("threshold permutation family needs k >= 3");
  std::vector<int> sizes(static_cast<std::size_t>(k - 1));
  std::iota(sizes.begin(), sizes.end(), 2);
  std::vector<std::string> out;
  do {
    std::string s;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      if (i > 0) s += "00";
      s.append(static_cast<std::size_t>(sizes[i]), '1');
    }
    out.push_back(std::move(s));
  } while (std::next_permutation(sizes.begin(), sizes.end()));
  return out;
}

std::vector<std::pair<std::string, ZfPolynomial>> same_poly_threshold_family(int k) {
  if (k < 3 || k > 5) throw PreconditionError("same_poly_threshold_family supports 3 <= k <= 5");
  std::vector<std::pair<std::string, ZfPolynomial>> out;
  for (auto& s : threshold_permutation_strings(k)) {
    ZfPolynomial p = poly_threshold(s);
    out.emplace_back(std::move(s), std::move(p));
  }
  return out;
}

}  // namespace zfp
