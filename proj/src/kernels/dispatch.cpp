#include <atomic>
#include <cstdlib>
#include <string>
#include <string_view>

#include "zfpoly/errors.hpp"
#include "zfpoly/kernels/kernels.hpp"

namespace zfp::kernels {

namespace {

bool host_has_avx2() noexcept {
#if defined(ZFPOLY_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Isa initial_isa() noexcept {
  if (const char* forced = std::getenv("ZFPOLY_KERNEL"); forced && std::string_view(forced) == "scalar") {
    return Isa::scalar;
  }
  return detected_isa();
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

const char* isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept { return isa == Isa::scalar || host_has_avx2(); }

Isa detected_isa() noexcept { return host_has_avx2() ? Isa::avx2 : Isa::scalar; }

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) throw PreconditionError(std::string("kernel variant not supported on this host: ") + isa_name(isa));
  current().store(isa, std::memory_order_relaxed);
}

void closure_batch(Isa isa, std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out) {
#if defined(ZFPOLY_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::closure_batch(adj, seeds, out);
#endif
  (void)isa;
  scalar::closure_batch(adj, seeds, out);
}

void closure_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out) {
  closure_batch(active_isa(), adj, seeds, out);
}

void fort_batch(Isa isa, std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out) {
#if defined(ZFPOLY_HAVE_AVX2)
  if (isa == Isa::avx2) return avx2::fort_batch(adj, sets, out);
#endif
  (void)isa;
  scalar::fort_batch(adj, sets, out);
}

void fort_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out) {
  fort_batch(active_isa(), adj, sets, out);
}

}  // namespace zfp::kernels
