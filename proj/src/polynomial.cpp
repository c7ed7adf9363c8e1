#include "zfpoly/polynomial.hpp"

#include <array>
#include <bit>

#include "parallel.hpp"
#include "zfpoly/errors.hpp"
#include "zfpoly/kernels/kernels.hpp"

namespace zfp {

namespace {

constexpr std::size_t kChunk = 512;
// 2^n must fit the subset counter with room to spare.
constexpr int kHardEnumerationLimit = 40;

void check_cap(const Graph& g, const EnumerationOptions& options) {
  const int cap = std::min(options.max_n, kHardEnumerationLimit);
  if (g.order() > cap) {
    throw SizeCapError("enumeration over " + std::to_string(g.order()) + " vertices exceeds the cap of " +
                       std::to_string(cap));
  }
}

/// Calls sink(seeds, closures) for consecutive chunks of subsets in [begin, end).
template <typename Sink>
void scan_closures(const Graph& g, std::uint64_t begin, std::uint64_t end, Sink&& sink) {
  std::array<std::uint64_t, kChunk> seeds{};
  std::array<std::uint64_t, kChunk> closed{};
  const auto adj = g.adjacency();
  while (begin < end) {
    const std::size_t count = static_cast<std::size_t>(std::min<std::uint64_t>(kChunk, end - begin));
    for (std::size_t i = 0; i < count; ++i) seeds[i] = begin + i;
    kernels::closure_batch(adj, std::span(seeds.data(), count), std::span(closed.data(), count));
    sink(std::span<const std::uint64_t>(seeds.data(), count), std::span<const std::uint64_t>(closed.data(), count));
    begin += count;
  }
}

}  // namespace

ZfPolynomial::ZfPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw PreconditionError("polynomial needs at least one coefficient");
}

ZfPolynomial ZfPolynomial::from_counts(std::span<const std::uint64_t> counts) {
  std::vector<BigInt> c;
  c.reserve(counts.size());
  for (std::uint64_t v : counts) c.emplace_back(v);
  return ZfPolynomial(std::move(c));
}

const BigInt& ZfPolynomial::coeff(int i) const noexcept {
  static const BigInt zero{0};
  if (i < 0 || i > order()) return zero;
  return coeffs_[static_cast<std::size_t>(i)];
}

std::vector<std::uint64_t> zero_forcing_counts(const Graph& g, const EnumerationOptions& options) {
  check_cap(g, options);
  const int n = g.order();
  const std::uint64_t full = low_mask(n);
  const std::uint64_t total = std::uint64_t{1} << n;
  const unsigned jobs = detail::resolve_jobs(options.jobs);
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(static_cast<std::size_t>(n) + 1, 0));
  detail::parallel_strides(total, jobs, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
    auto& local = partial[w];
    scan_closures(g, begin, end, [&](auto seeds, auto closed) {
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        if (closed[i] == full) ++local[static_cast<std::size_t>(std::popcount(seeds[i]))];
      }
    });
  });
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& local : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += local[i];
  }
  return counts;
}

std::vector<std::uint8_t> zero_forcing_flags(const Graph& g, const EnumerationOptions& options) {
  check_cap(g, options);
  const std::uint64_t full = low_mask(g.order());
  const std::uint64_t total = std::uint64_t{1} << g.order();
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(total), 0);
  detail::parallel_strides(total, options.jobs, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
    scan_closures(g, begin, end, [&](auto seeds, auto closed) {
      for (std::size_t i = 0; i < seeds.size(); ++i) flags[static_cast<std::size_t>(seeds[i])] = closed[i] == full;
    });
  });
  return flags;
}

ZfPolynomial zf_polynomial(const Graph& g, const EnumerationOptions& options) {
  return ZfPolynomial::from_counts(zero_forcing_counts(g, options));
}

BigInt count_zfs(const Graph& g, int i, const EnumerationOptions& options) {
  check_cap(g, options);
  const int n = g.order();
  if (i < 0 || i > n) throw PreconditionError("cardinality outside [0, n]");
  const std::uint64_t full = low_mask(n);
  if (i == 0) return BigInt(n == 0 ? 1 : 0);

  std::uint64_t count = 0;
  std::array<std::uint64_t, kChunk> seeds{};
  std::array<std::uint64_t, kChunk> closed{};
  std::size_t filled = 0;
  auto flush = [&] {
    kernels::closure_batch(g.adjacency(), std::span(seeds.data(), filled), std::span(closed.data(), filled));
    for (std::size_t k = 0; k < filled; ++k) count += closed[k] == full;
    filled = 0;
  };
  // Gosper's hack walks the i-subsets of [0, n) in increasing order.
  for (std::uint64_t s = low_mask(i); s <= full;) {
    seeds[filled++] = s;
    if (filled == kChunk) flush();
    const std::uint64_t low = s & (~s + 1);
    const std::uint64_t ripple = s + low;
    s = (((ripple ^ s) >> 2) / low) | ripple;
  }
  flush();
  return BigInt(count);
}

ZfPolynomial multiply(const ZfPolynomial& p, const ZfPolynomial& q) {
  std::vector<BigInt> out(static_cast<std::size_t>(p.order() + q.order()) + 1, BigInt(0));
  for (int i = 0; i <= p.order(); ++i) {
    if (p.coeff(i) == 0) continue;
    for (int j = 0; j <= q.order(); ++j) out[static_cast<std::size_t>(i + j)] += p.coeff(i) * q.coeff(j);
  }
  return ZfPolynomial(std::move(out));
}

ZfPolynomial zf_polynomial_by_components(const Graph& g, const EnumerationOptions& options) {
  ZfPolynomial product;
  for (VertexSet comp : connected_components(g)) {
    product = multiply(product, zf_polynomial(g.induced_subgraph(comp), options));
  }
  return product;
}

Rational evaluate(const ZfPolynomial& p, const Rational& x) {
  Rational acc = 0;
  for (int i = p.order(); i >= 0; --i) acc = acc * x + Rational(p.coeff(i));
  return acc;
}

int zero_forcing_number(const ZfPolynomial& p) {
  for (int i = 0; i <= p.order(); ++i) {
    if (p.coeff(i) != 0) return i;
  }
  throw PreconditionError("zero polynomial has no zero forcing number");
}

bool is_unimodal(const ZfPolynomial& p) {
  int first = -1;
  int last = -1;
  for (int i = 0; i <= p.order(); ++i) {
    if (p.coeff(i) != 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) return true;
  bool falling = false;
  for (int i = first + 1; i <= last; ++i) {
    if (p.coeff(i) < p.coeff(i - 1)) {
      falling = true;
    } else if (p.coeff(i) > p.coeff(i - 1) && falling) {
      return false;
    }
  }
  // An interior zero always produces a fall followed by a rise, so it is already rejected.
  return true;
}

std::string to_pretty(const ZfPolynomial& p) {
  std::string out;
  for (int i = 0; i <= p.order(); ++i) {
    const BigInt& c = p.coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1 || i == 0) out += c.str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const ZfPolynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(c.str());
  return {{"n", p.order()}, {"coeffs", std::move(coeffs)}};
}

ZfPolynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coeffs")) {
    throw ParseError("polynomial JSON needs 'n' and 'coeffs'");
  }
  if (!j["n"].is_number_integer() || !j["coeffs"].is_array()) throw ParseError("polynomial JSON has wrong field types");
  std::vector<BigInt> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_string()) throw ParseError("coefficients must be decimal strings");
    coeffs.push_back(parse_bigint(c.get<std::string>()));
  }
  if (static_cast<long long>(coeffs.size()) != j["n"].get<long long>() + 1) {
    throw ParseError("coefficient count must be n + 1");
  }
  return ZfPolynomial(std::move(coeffs));
}

}  // namespace zfp
