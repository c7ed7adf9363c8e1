#include "zfpoly/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "zfpoly/errors.hpp"

namespace zfp {

namespace {

/// numerator / divisor where the quotient is known to count something.
BigInt exact_divide(const BigInt& numerator, long long divisor, const char* where) {
  if (numerator % divisor != 0) throw std::logic_error(std::string(where) + ": term is not integral");
  return numerator / divisor;
}

std::vector<BigInt> zeros(int n) { return std::vector<BigInt>(static_cast<std::size_t>(n) + 1, BigInt(0)); }

void require_threshold_input(const BlockPartition& p) {
  if (!p.canonical) throw PreconditionError("threshold string must start with two equal symbols");
  if (!p.connected) throw PreconditionError("threshold string must end in '1' (connected graph)");
}

}  // namespace

BigInt binom(long long a, long long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt out = 1;
  for (long long i = 1; i <= b; ++i) out = out * (a - b + i) / i;
  return out;
}

ZfPolynomial poly_complete(int n) {
  if (n < 1) throw PreconditionError("complete graph polynomial requires n >= 1");
  auto c = zeros(n);
  c[static_cast<std::size_t>(n)] = 1;
  if (n >= 2) c[static_cast<std::size_t>(n - 1)] = n;
  return ZfPolynomial(std::move(c));
}

ZfPolynomial poly_multipartite(std::span<const int> parts) {
  if (parts.size() < 2) throw PreconditionError("multipartite formula needs at least two parts");
  int n = 0;
  BigInt cross = 0;
  for (int a : parts) {
    if (a < 2) throw PreconditionError("multipartite formula needs every part of size >= 2");
    cross += BigInt(n) * a;
    n += a;
  }
  auto c = zeros(n);
  c[static_cast<std::size_t>(n)] = 1;
  c[static_cast<std::size_t>(n - 1)] = n;
  c[static_cast<std::size_t>(n - 2)] = cross;
  return ZfPolynomial(std::move(c));
}

ZfPolynomial poly_path(int n) {
  if (n < 1) throw PreconditionError("path polynomial requires n >= 1");
  auto c = zeros(n);
  for (int i = 1; i <= n; ++i) c[static_cast<std::size_t>(i)] = binom(n, i) - binom(n - i - 1, i);
  return ZfPolynomial(std::move(c));
}

ZfPolynomial poly_cycle(int n) {
  if (n < 3) throw PreconditionError("cycle polynomial requires n >= 3");
  auto c = zeros(n);
  for (int i = 2; i <= n; ++i) {
    // i-subsets with no two cyclically adjacent vertices
    const BigInt independent = exact_divide(BigInt(n) * binom(n - i - 1, i - 1), i, "poly_cycle");
    c[static_cast<std::size_t>(i)] = binom(n, i) - independent;
  }
  return ZfPolynomial(std::move(c));
}

BigInt count_consecutive_selections(int n, int k, int m) {
  if (m < 3) throw PreconditionError("consecutive selection count requires m >= 3");
  if (n < 3) throw PreconditionError("consecutive selection count requires n >= 3");
  if (k < m || k > n) return 0;
  if (k == n) return 1;

  BigInt total = 0;
  const int last_live = n / (m + 1);
  for (int t = 1; t <= n; ++t) {
    // number of t-sets of run starts spaced at least m+1 apart around the cycle
    const BigInt placements =
        exact_divide(BigInt(n) * binom(n - static_cast<long long>(m) * t - 1, t - 1), t, "count_consecutive_selections");
    const BigInt term = placements * binom(n - static_cast<long long>(m + 1) * t, k - static_cast<long long>(m) * t);
    if (t > last_live) {
      if (term != 0) throw std::logic_error("count_consecutive_selections: nonzero term past the last admissible t");
      continue;
    }
    if (t % 2 == 1) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

ZfPolynomial poly_wheel(int n) {
  if (n < 5) throw PreconditionError("wheel formula requires n >= 5 (W_4 is K_4)");
  const ZfPolynomial rim = poly_cycle(n - 1);
  auto c = zeros(n);
  for (int i = 1; i <= n; ++i) {
    c[static_cast<std::size_t>(i)] = rim.coeff(i - 1) + count_consecutive_selections(n - 1, i, 3);
  }
  return ZfPolynomial(std::move(c));
}

AlgoOneState algorithm_one_state(const BlockPartition& partition, int s) {
  require_threshold_input(partition);
  const int t = partition.block_count();
  if (s < 1 || s > t || partition.block(s).symbol != '1') {
    throw PreconditionError("algorithm_one_state: s must index a 1-block");
  }
  auto with = [](BlockIndexSet a, std::initializer_list<int> extra) {
    a.insert(a.end(), extra);
    std::sort(a.begin(), a.end());
    return a;
  };

  AlgoOneState state;
  int at = 0;
  if (t % 2 == 1) {
    state = {{{}, false}, {{1}, true}};
    at = 1;
  } else {
    state = {{{}, false}, {{1}, false}, {{2}, true}, {{1, 2}, true}};
    at = 2;
  }
  for (int next = at + 2; next <= s; next += 2) {
    AlgoOneState grown;
    const bool single_zero = partition.block(next - 1).length == 1;
    for (const auto& [a, pending] : state) {
      if (pending && single_zero) {
        // excluding both the lone 0-vertex and a vertex of block `next` would leave
        // two missing 1-vertices with no kept 0-vertex between them
        grown.insert({a, false});
        grown.insert({with(a, {next - 1}), true});
        grown.insert({with(a, {next}), true});
      } else {
        grown.insert({a, false});
        grown.insert({with(a, {next - 1}), false});
        grown.insert({with(a, {next}), true});
        grown.insert({with(a, {next - 1, next}), true});
      }
    }
    state = std::move(grown);
  }
  return state;
}

std::set<BlockIndexSet> algorithm_one(const BlockPartition& partition) {
  require_threshold_input(partition);
  std::set<BlockIndexSet> out;
  for (const auto& entry : algorithm_one_state(partition, partition.block_count())) out.insert(entry.blocks);
  return out;
}

ZfPolynomial poly_threshold(std::string_view binary) {
  const BlockPartition partition = block_partition(binary);
  require_threshold_input(partition);
  const int n = static_cast<int>(binary.size());
  if (n < 2) throw PreconditionError("threshold formula requires at least two symbols");
  auto c = zeros(n);
  for (const auto& a : algorithm_one(partition)) {
    BigInt ways = 1;
    for (int i : a) ways *= partition.block(i).length;
    c[static_cast<std::size_t>(n) - a.size()] += ways;
  }
  return ZfPolynomial(std::move(c));
}

bool threshold_zfs_check(std::string_view binary, VertexSet s) {
  const BlockPartition partition = block_partition(binary);
  require_threshold_input(partition);
  const int n = static_cast<int>(binary.size());
  if (n < 2) throw PreconditionError("threshold characterisation requires at least two symbols");
  if (!s.is_subset_of(VertexSet::first(n))) throw PreconditionError("set contains a position beyond the string");

  int pos = 0;
  for (const Block& b : partition.blocks) {
    int missing = 0;
    for (int v = pos; v < pos + b.length; ++v) missing += s.contains(v) ? 0 : 1;
    if (missing > 1) return false;
    pos += b.length;
  }

  bool open_missing_one = false;  // a missing 1-vertex not yet separated by a kept 0-vertex
  for (int v = 0; v < n; ++v) {
    const bool kept = s.contains(v);
    if (binary[static_cast<std::size_t>(v)] == '0') {
      if (kept) open_missing_one = false;
    } else if (!kept) {
      if (open_missing_one) return false;
      open_missing_one = true;
    }
  }
  return true;
}

}  // namespace zfp
