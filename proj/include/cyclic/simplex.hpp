#pragma once

// Vertex subsets of [n] on the moment curve. Points are identified with their
// index along the curve, so a simplex is just a set of indices; sets are packed
// into a 64-bit mask (bit i <=> vertex i), which bounds indices to 1..63.

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "cyclic/errors.hpp"

namespace cyclic {

using Vertex = int;
using Mask = std::uint64_t;

inline constexpr Vertex kMaxVertex = 63;

/// Ambient dimension of the moment curve. Always >= 1.
class Dim {
 public:
  constexpr explicit Dim(int value) : value_(value) {
    if (value < 1) throw InvalidInput("dimension must be >= 1, got " + std::to_string(value));
  }
  constexpr int value() const noexcept { return value_; }
  constexpr Dim next() const { return Dim(value_ + 1); }
  constexpr Dim prev() const { return Dim(value_ - 1); }
  constexpr bool even() const noexcept { return value_ % 2 == 0; }
  /// ceil(d/2): dimension of the simplices in a submersion set.
  constexpr int half_up() const noexcept { return (value_ + 1) / 2; }
  friend constexpr auto operator<=>(Dim, Dim) = default;

 private:
  int value_;
};

namespace detail {

struct SimplexTag {};
struct GroundTag {};

/// Strictly increasing vertex list stored as a bit mask.
template <class Tag>
class VertexMask {
 public:
  constexpr VertexMask() = default;

  VertexMask(std::initializer_list<Vertex> vertices)
      : VertexMask(std::span<const Vertex>(vertices.begin(), vertices.size())) {}

  /// Throws InvalidInput unless `vertices` is strictly increasing within 1..63.
  explicit VertexMask(std::span<const Vertex> vertices) {
    Vertex last = 0;
    for (Vertex v : vertices) {
      if (v < 1 || v > kMaxVertex)
        throw InvalidInput("vertex " + std::to_string(v) + " outside 1.." + std::to_string(kMaxVertex));
      if (v <= last) throw InvalidInput("vertex list is not strictly increasing");
      bits_ |= Mask{1} << v;
      last = v;
    }
  }

  static constexpr VertexMask from_mask(Mask bits) {
    VertexMask s;
    s.bits_ = bits & ~Mask{1};
    return s;
  }

  /// The interval {lo, ..., hi}; empty when lo > hi.
  static constexpr VertexMask interval(Vertex lo, Vertex hi) {
    if (lo < 1) lo = 1;
    if (hi > kMaxVertex) hi = kMaxVertex;
    if (lo > hi) return {};
    const Mask upto_hi = hi == 63 ? ~Mask{0} : (Mask{1} << (hi + 1)) - 1;
    const Mask below_lo = (Mask{1} << lo) - 1;
    return from_mask(upto_hi & ~below_lo);
  }

  /// {1, ..., n}
  static constexpr VertexMask range(int n) { return interval(1, n); }

  constexpr Mask mask() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int dim() const noexcept { return size() - 1; }
  constexpr Vertex min() const noexcept { return std::countr_zero(bits_); }
  constexpr Vertex max() const noexcept { return 63 - std::countl_zero(bits_); }
  constexpr bool contains(Vertex v) const noexcept {
    return v >= 1 && v <= kMaxVertex && ((bits_ >> v) & 1U);
  }
  constexpr bool is_subset_of(VertexMask other) const noexcept { return (bits_ & ~other.bits_) == 0; }

  constexpr VertexMask with(Vertex v) const { return from_mask(bits_ | (Mask{1} << v)); }
  constexpr VertexMask without(Vertex v) const { return from_mask(bits_ & ~(Mask{1} << v)); }

  friend constexpr VertexMask operator|(VertexMask a, VertexMask b) { return from_mask(a.bits_ | b.bits_); }
  friend constexpr VertexMask operator&(VertexMask a, VertexMask b) { return from_mask(a.bits_ & b.bits_); }
  friend constexpr VertexMask operator-(VertexMask a, VertexMask b) { return from_mask(a.bits_ & ~b.bits_); }

  /// Position of `v` among the members (0-based). `v` must be a member.
  constexpr int rank(Vertex v) const noexcept { return std::popcount(bits_ & ((Mask{1} << v) - 1)); }

  /// The member at 0-based position `k`.
  constexpr Vertex nth(int k) const noexcept {
    Mask b = bits_;
    for (int i = 0; i < k; ++i) b &= b - 1;
    return std::countr_zero(b);
  }

  std::vector<Vertex> vertices() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Mask b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// Calls f(v) for each member in increasing order.
  template <class F>
  constexpr void for_each(F&& f) const {
    for (Mask b = bits_; b; b &= b - 1) f(static_cast<Vertex>(std::countr_zero(b)));
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](Vertex v) {
      if (!first) s += ',';
      s += std::to_string(v);
      first = false;
    });
    return s + "}";
  }

  friend constexpr bool operator==(VertexMask, VertexMask) = default;

  /// Lexicographic order of the sorted vertex lists.
  friend constexpr std::strong_ordering operator<=>(VertexMask a, VertexMask b) noexcept {
    const Mask diff = a.bits_ ^ b.bits_;
    if (diff == 0) return std::strong_ordering::equal;
    const int e = std::countr_zero(diff);
    const bool a_has = (a.bits_ >> e) & 1U;
    const Mask owner_other = a_has ? b.bits_ : a.bits_;
    // The set without `e` is a strict prefix of the other when it has nothing past `e`.
    const bool other_continues = e < 63 && (owner_other >> (e + 1)) != 0;
    if (a_has) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
    return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  Mask bits_ = 0;
};

}  // namespace detail

/// A simplex on the moment curve, identified with its vertex-index set.
using Simplex = detail::VertexMask<detail::SimplexTag>;

/// A ground set of moment-curve points (the vertex set of a polytope).
using VertexSet = detail::VertexMask<detail::GroundTag>;

inline Simplex as_simplex(VertexSet v) { return Simplex::from_mask(v.mask()); }
inline VertexSet as_vertex_set(Simplex s) { return VertexSet::from_mask(s.mask()); }

/// All k-element subsets of `ground`, in lexicographic order.
std::vector<Simplex> subsets_of_size(VertexSet ground, int k);

/// All subsets of `s` with exactly k elements, in lexicographic order.
std::vector<Simplex> faces_of_size(Simplex s, int k);

}  // namespace cyclic

template <class Tag>
struct std::hash<cyclic::detail::VertexMask<Tag>> {
  std::size_t operator()(cyclic::detail::VertexMask<Tag> s) const noexcept {
    return std::hash<cyclic::Mask>{}(s.mask());
  }
};
