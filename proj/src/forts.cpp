#include "zfpoly/forts.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "parallel.hpp"
#include "zfpoly/closed_forms.hpp"
#include "zfpoly/errors.hpp"
#include "zfpoly/forcing.hpp"
#include "zfpoly/kernels/kernels.hpp"

namespace zfp {

namespace {

bool by_size_then_bits(VertexSet a, VertexSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

class HittingSetSearch {
 public:
  HittingSetSearch(int n, std::vector<std::uint64_t> sets) : n_(n), sets_(std::move(sets)) {}

  FortCover solve() {
    greedy_incumbent();
    search(0, 0, 0);
    return {best_size_, VertexSet(best_), false};
  }

 private:
  void greedy_incumbent() {
    std::uint64_t chosen = 0;
    for (;;) {
      std::array<int, kMaxVertices> hits{};
      bool any = false;
      for (std::uint64_t s : sets_) {
        if (s & chosen) continue;
        any = true;
        for (int v : VertexSet(s)) ++hits[static_cast<std::size_t>(v)];
      }
      if (!any) break;
      const auto top = std::max_element(hits.begin(), hits.begin() + n_);
      chosen |= std::uint64_t{1} << (top - hits.begin());
    }
    best_ = chosen;
    best_size_ = std::popcount(chosen);
  }

  void search(std::uint64_t chosen, std::uint64_t forbidden, int size) {
    const std::uint64_t allowed = low_mask(n_) & ~forbidden & ~chosen;
    open_.clear();
    std::uint64_t branch = 0;
    int branch_width = std::numeric_limits<int>::max();
    for (std::uint64_t s : sets_) {
      if (s & chosen) continue;
      const std::uint64_t candidates = s & allowed;
      if (candidates == 0) return;  // an unhit set can no longer be hit
      open_.push_back(candidates);
      const int width = std::popcount(candidates);
      if (width < branch_width) {
        branch_width = width;
        branch = candidates;
      }
    }
    if (open_.empty()) {
      if (size < best_size_ || (size == best_size_ && lex_less(VertexSet(chosen), VertexSet(best_)))) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + packing_bound() > best_size_) return;

    std::uint64_t excluded = forbidden;
    for (int v : VertexSet(branch)) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      search(chosen | bit, excluded, size + 1);
      excluded |= bit;
    }
  }

  /// Disjoint open sets each need their own vertex.
  int packing_bound() {
    std::sort(open_.begin(), open_.end(),
              [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
    std::uint64_t used = 0;
    int count = 0;
    for (std::uint64_t s : open_) {
      if (s & used) continue;
      used |= s;
      ++count;
    }
    return count;
  }

  int n_;
  std::vector<std::uint64_t> sets_;
  std::vector<std::uint64_t> open_;
  std::uint64_t best_ = 0;
  int best_size_ = 0;
};

}  // namespace

bool is_fort(const Graph& g, VertexSet f) {
  if (!f.is_subset_of(g.vertices())) throw PreconditionError("set contains a non-vertex");
  return kernels::scalar::is_fort(g.adjacency(), f.bits());
}

FortFamily enumerate_forts(const Graph& g, const EnumerationOptions& options) {
  const int n = g.order();
  if (n > std::min(options.max_n, 40)) {
    throw SizeCapError("fort enumeration over " + std::to_string(n) + " vertices exceeds the cap of " +
                       std::to_string(options.max_n));
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned jobs = detail::resolve_jobs(options.jobs);
  std::vector<std::vector<VertexSet>> partial(jobs);
  detail::parallel_strides(total, jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    constexpr std::size_t kChunk = 512;
    std::array<std::uint64_t, kChunk> sets{};
    std::array<std::uint8_t, kChunk> flags{};
    while (begin < end) {
      const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, end - begin));
      for (std::size_t i = 0; i < count; ++i) sets[i] = begin + i;
      kernels::fort_batch(g.adjacency(), std::span(sets.data(), count), std::span(flags.data(), count));
      for (std::size_t i = 0; i < count; ++i) {
        if (flags[i]) partial[w].emplace_back(sets[i]);
      }
      begin += count;
    }
  });
  FortFamily family{n, {}};
  for (auto& local : partial) family.forts.insert(family.forts.end(), local.begin(), local.end());
  std::sort(family.forts.begin(), family.forts.end(), by_size_then_bits);
  return family;
}

std::vector<VertexSet> minimal_forts(const FortFamily& family) {
  std::vector<VertexSet> sorted = family.forts;
  std::sort(sorted.begin(), sorted.end(), by_size_then_bits);
  std::vector<VertexSet> out;
  for (VertexSet f : sorted) {
    const bool has_smaller = std::any_of(out.begin(), out.end(), [&](VertexSet m) { return m.is_subset_of(f); });
    if (!has_smaller) out.push_back(f);
  }
  return out;
}

FortCover min_hitting_set(int n, const std::vector<VertexSet>& sets) {
  if (n < 0 || n > kMaxVertices) throw SizeCapError("hitting set universe exceeds the vertex cap");
  std::vector<std::uint64_t> raw;
  raw.reserve(sets.size());
  for (VertexSet s : sets) {
    if (s.empty()) throw PreconditionError("cannot hit an empty set");
    if (!s.is_subset_of(VertexSet::first(n))) throw PreconditionError("set member outside the universe");
    raw.push_back(s.bits());
  }
  return HittingSetSearch(n, std::move(raw)).solve();
}

FortCover min_fort_cover(const Graph& g, const EnumerationOptions& options) {
  // A set meets every fort iff it meets every minimal fort.
  FortCover cover = min_hitting_set(g.order(), minimal_forts(enumerate_forts(g, options)));
  cover.witness_is_zero_forcing = is_zero_forcing_set(g, cover.witness);
  return cover;
}

FortCountBound fort_count_bound(const Graph& g, const EnumerationOptions& options) {
  const FortFamily forts = enumerate_forts(g, options);
  const ZfPolynomial p = zf_polynomial(g, options);
  FortCountBound out;
  out.fort_count = forts.forts.size();
  out.bound = (BigInt(1) << g.order()) - numerator(evaluate(p, Rational(1)));
  out.holds = out.fort_count <= out.bound;
  return out;
}

std::optional<std::vector<CoefficientBoundRow>> small_fort_coefficient_bound(const Graph& g, const FortFamily& forts,
                                                                            const ZfPolynomial& p) {
  const int n = g.order();
  if (n < 1) return std::nullopt;
  const int z = zero_forcing_number(p);
  const bool applicable =
      std::any_of(forts.forts.begin(), forts.forts.end(), [&](VertexSet f) { return f.size() <= z + 1; });
  if (!applicable) return std::nullopt;
  std::vector<CoefficientBoundRow> rows;
  for (int i = 1; i <= n; ++i) {
    CoefficientBoundRow row{i, p.coeff(i), binom(n, i) - binom(n - i - 1, i), false};
    row.holds = row.coefficient <= row.bound;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::optional<std::vector<CoefficientBoundRow>> small_fort_coefficient_bound(const Graph& g,
                                                                            const EnumerationOptions& options) {
  return small_fort_coefficient_bound(g, enumerate_forts(g, options), zf_polynomial(g, options));
}

nlohmann::json to_json(const FortFamily& family) {
  nlohmann::json forts = nlohmann::json::array();
  for (VertexSet f : family.forts) forts.push_back(f.to_vector());
  return {{"n", family.n}, {"count", family.forts.size()}, {"forts", std::move(forts)}};
}

nlohmann::json to_json(const FortCover& cover) {
  return {{"size", cover.size},
          {"witness", cover.witness.to_vector()},
          {"witness_is_zero_forcing", cover.witness_is_zero_forcing}};
}

}  // namespace zfp
