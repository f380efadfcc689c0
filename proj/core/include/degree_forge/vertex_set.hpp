#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace degree_forge {

inline constexpr int kMaxGround = 64;

// A subset of the ground set [n] = {1,...,n}, n <= 64. Vertex x is bit x-1.
class VertexSet {
 public:
  using Mask = std::uint64_t;

  constexpr VertexSet() = default;
  static constexpr VertexSet from_mask(Mask m) { return VertexSet(m); }

  // Throws ParameterError for vertices outside 1..64.
  static VertexSet of(std::initializer_list<int> vertices);
  static VertexSet of(const std::vector<int>& vertices);
  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static VertexSet interval(int lo, int hi);
  // [n]
  static VertexSet full(int n) { return interval(1, n); }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const {
    return v >= 1 && v <= kMaxGround && ((mask_ >> (v - 1)) & 1u) != 0;
  }
  constexpr bool subset_of(VertexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  // Smallest / largest member; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(mask_) + 1; }
  constexpr int max() const { return kMaxGround - std::countl_zero(mask_); }

  VertexSet with(int v) const;
  VertexSet without(int v) const;
  std::vector<int> elements() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(mask_ | o.mask_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(mask_ & o.mask_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(mask_ & ~o.mask_); }
  constexpr bool operator==(const VertexSet&) const = default;

 private:
  constexpr explicit VertexSet(Mask m) : mask_(m) {}
  Mask mask_ = 0;
};

constexpr int intersection_size(VertexSet a, VertexSet b) {
  return std::popcount(a.mask() & b.mask());
}

enum class SetOrder { lex, colex };

// Lexicographic order: A < B iff min(A\B) < min(B\A). Total on all subsets.
constexpr bool lex_less(VertexSet a, VertexSet b) {
  const auto diff = a.mask() ^ b.mask();
  if (diff == 0) return false;
  return (a.mask() & (diff & (~diff + 1))) != 0;
}

// Colexicographic order: A < B iff max(A\B) < max(B\A), i.e. numeric order
// of the masks.
constexpr bool colex_less(VertexSet a, VertexSet b) { return a.mask() < b.mask(); }

struct LexLess {
  constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

// Three-way comparison of two sets of equal cardinality. Throws
// ParameterError when the cardinalities differ.
std::strong_ordering compare_sets(VertexSet a, VertexSet b, SetOrder order);

// "1,2,5"
std::string to_string(VertexSet s);

}  // namespace degree_forge

template <>
struct std::hash<degree_forge::VertexSet> {
  std::size_t operator()(degree_forge::VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.mask());
  }
};
