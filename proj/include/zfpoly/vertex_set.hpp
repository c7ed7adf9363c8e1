#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace zfp {

inline constexpr int kMaxVertices = 64;

/// Mask with the low `n` bits set; valid for 0 <= n <= 64.
constexpr std::uint64_t low_mask(int n) noexcept {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

/// A set of vertex indices in [0, 64), stored as one machine word.
class VertexSet {
 public:
  constexpr VertexSet() noexcept = default;
  constexpr explicit VertexSet(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<int> vertices) noexcept {
    for (int v : vertices) bits_ |= std::uint64_t{1} << v;
  }

  /// {0, 1, ..., n-1}
  static constexpr VertexSet first(int n) noexcept { return VertexSet(low_mask(n)); }
  static constexpr VertexSet single(int v) noexcept { return VertexSet(std::uint64_t{1} << v); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  /// Smallest member; undefined on the empty set.
  constexpr int front() const noexcept { return std::countr_zero(bits_); }

  constexpr VertexSet& insert(int v) noexcept {
    bits_ |= std::uint64_t{1} << v;
    return *this;
  }
  constexpr VertexSet& erase(int v) noexcept {
    bits_ &= ~(std::uint64_t{1} << v);
    return *this;
  }

  constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet operator|(VertexSet o) const noexcept { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const noexcept { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const noexcept { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) noexcept {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr auto operator<=>(const VertexSet&) const noexcept = default;

  /// Forward iteration over members in increasing order.
  class iterator {
   public:
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this) out.push_back(v);
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

/// Orders sets by their sorted member lists, lexicographically ({0,5} < {1,2}).
inline bool lex_less(VertexSet a, VertexSet b) noexcept {
  auto ia = a.begin(), ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

}  // namespace zfp
