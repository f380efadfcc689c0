#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "degree_forge/vertex_set.hpp"

namespace degree_forge {

// A k-uniform family over a ground set contained in [n], stored duplicate-free
// in lexicographic order. The ground set is [n] except for families produced
// by link(), which keep original labels and record [n] \ B as their ground set.
class UniformFamily {
 public:
  // Empty family over [n]. Requires 1 <= n <= 64 and 0 <= k <= n.
  UniformFamily(int n, int k);

  // Sorts `sets` into canonical order. Throws ParameterError on duplicates,
  // wrong cardinalities, or members outside the ground set.
  static UniformFamily from_sets(int n, int k, std::vector<VertexSet> sets);
  static UniformFamily from_sets(int n, int k, std::vector<VertexSet> sets, VertexSet ground);

  int n() const { return n_; }
  int k() const { return k_; }
  VertexSet ground() const { return ground_; }

  std::span<const VertexSet> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  auto begin() const { return sets_.begin(); }
  auto end() const { return sets_.end(); }
  const VertexSet& operator[](std::size_t i) const { return sets_[i]; }

  bool contains(VertexSet s) const;

  bool operator==(const UniformFamily&) const = default;

 private:
  UniformFamily(int n, int k, VertexSet ground, std::vector<VertexSet> sorted_sets);

  int n_;
  int k_;
  VertexSet ground_;
  std::vector<VertexSet> sets_;
};

// Per-vertex degrees plus the sorted view d_1 >= ... >= d_|ground|.
struct DegreeSequence {
  // per_vertex[x-1] = number of members containing x, for x in 1..n.
  std::vector<std::int64_t> per_vertex;
  // Non-increasing degrees over the ground set; ties by ascending label.
  std::vector<std::int64_t> sorted;
  // order[i-1] = x_i, the vertex realising d_i.
  std::vector<int> order;

  // d_i, 1-based. Throws ParameterError when i is outside 1..sorted.size().
  std::int64_t d(int i) const;
};

DegreeSequence degree_sequence(const UniformFamily& family);

// Every pair of members shares at least t vertices. Requires 1 <= t <= k.
bool is_t_intersecting(const UniformFamily& family, int t);

// F(A,B) = {F \ B : F in F, F cap B = A}; labels are kept. Requires A subset of B.
UniformFamily link(const UniformFamily& family, VertexSet a, VertexSet b);

// |F| - d_1(F).
std::int64_t diversity(const UniformFamily& family);

// All k-subsets of [n] in lexicographic order.
std::vector<VertexSet> all_k_sets(int n, int k);

// True iff `s` meets every member in at least t vertices.
bool meets_all(const UniformFamily& family, VertexSet s, int t);

}  // namespace degree_forge
