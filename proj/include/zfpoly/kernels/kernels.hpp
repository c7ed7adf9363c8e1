#pragma once

// Bit-parallel inner loops shared by the enumeration engines.
//
// Each kernel exists as a portable scalar reference and as an AVX2 variant
// that processes four vertex sets per 256-bit register. The variant is picked
// once at startup from the host CPU; ZFPOLY_KERNEL=scalar forces the reference.
// Both variants must produce bit-identical output (see tests/kernels_test.cpp).

#include <cstdint>
#include <span>

namespace zfp::kernels {

enum class Isa { scalar, avx2 };

const char* isa_name(Isa isa) noexcept;
bool isa_supported(Isa isa) noexcept;
/// Best variant the host supports, ignoring overrides.
Isa detected_isa() noexcept;
/// Variant used by the dispatching entry points.
Isa active_isa() noexcept;
/// Throws PreconditionError if the host cannot run `isa`.
void set_active_isa(Isa isa);

/// out[i] = zero forcing closure of seeds[i] in the graph with neighbour rows `adj`.
/// `out` may alias `seeds`.
void closure_batch(Isa isa, std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out);
void closure_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out);

/// out[i] = 1 iff sets[i] is nonempty and no vertex outside it has exactly one neighbour inside.
void fort_batch(Isa isa, std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out);
void fort_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out);

// Individual variants; the avx2 ones must only be called when isa_supported(Isa::avx2).
namespace scalar {
std::uint64_t closure(std::span<const std::uint64_t> adj, std::uint64_t seed) noexcept;
bool is_fort(std::span<const std::uint64_t> adj, std::uint64_t set) noexcept;
void closure_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out) noexcept;
void fort_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out) noexcept;
}  // namespace scalar

namespace avx2 {
void closure_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> seeds,
                   std::span<std::uint64_t> out) noexcept;
void fort_batch(std::span<const std::uint64_t> adj, std::span<const std::uint64_t> sets,
                std::span<std::uint8_t> out) noexcept;
}  // namespace avx2

}  // namespace zfp::kernels
