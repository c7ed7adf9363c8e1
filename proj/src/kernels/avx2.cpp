// Compiled with -mavx2; only reached through dispatch after a CPU check.

#include <immintrin.h>

#include "zfpoly/kernels/kernels.hpp"

namespace zfp::kernels::avx2 {

namespace {

inline __m256i exactly_one_bit(__m256i x) noexcept {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i nonzero_not = _mm256_cmpeq_epi64(x, zero);
  const __m256i pow2 = _mm256_cmpeq_epi64(_mm256_and_si256(x, _mm256_sub_epi64(x, one)), zero);
  return _mm256_andnot_si256(nonzero_not, pow2);
}

inline __m256i lane_has_vertex(__m256i sets, int v) noexcept {
  const __m256i bit = _mm256_set1_epi64x(static_cast<long long>(std::uint64_t{1} << v));
  return _mm256_cmpeq_epi64(_mm256_and_si256(sets, bit), bit);
}

}  // namespace

void closure_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out) noexcept {
  const int n = static_cast<int>(adj.size());
  const std::size_t count = seeds.size();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    __m256i colored = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(seeds.data() + i));
    for (;;) {
      const __m256i before = colored;
      for (int u = 0; u < n; ++u) {
        const __m256i row = _mm256_set1_epi64x(static_cast<long long>(adj[static_cast<std::size_t>(u)]));
        const __m256i uncolored = _mm256_andnot_si256(colored, row);
        const __m256i can_force = _mm256_and_si256(lane_has_vertex(colored, u), exactly_one_bit(uncolored));
        colored = _mm256_or_si256(colored, _mm256_and_si256(can_force, uncolored));
      }
      const __m256i diff = _mm256_xor_si256(colored, before);
      if (_mm256_testz_si256(diff, diff)) break;
    }
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + i), colored);
  }
  if (i < count) scalar::closure_batch(adj, seeds.subspan(i), out.subspan(i));
}

void fort_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out) noexcept {
  const int n = static_cast<int>(adj.size());
  const std::size_t count = sets.size();
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256i f = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(sets.data() + i));
    __m256i bad = _mm256_cmpeq_epi64(f, zero);
    for (int v = 0; v < n; ++v) {
      const __m256i row = _mm256_set1_epi64x(static_cast<long long>(adj[static_cast<std::size_t>(v)]));
      const __m256i outside = _mm256_andnot_si256(lane_has_vertex(f, v), _mm256_set1_epi64x(-1));
      bad = _mm256_or_si256(bad, _mm256_and_si256(outside, exactly_one_bit(_mm256_and_si256(row, f))));
    }
    const int lanes_bad = _mm256_movemask_pd(_mm256_castsi256_pd(bad));
    for (int lane = 0; lane < 4; ++lane) out[i + static_cast<std::size_t>(lane)] = ((lanes_bad >> lane) & 1) ? 0 : 1;
  }
  if (i < count) scalar::fort_batch(adj, sets.subspan(i), out.subspan(i));
}

}  // namespace zfp::kernels::avx2
