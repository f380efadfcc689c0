#pragma once

#include <compare>
#include <vector>

#include "degree_forge/family.hpp"

namespace degree_forge {

inline constexpr int kCanonicalMaxN = 12;

// Relabeling-invariant representative of a family: the relabeled copy whose
// characteristic vector over all k-subsets of [n], taken in colex order, is
// lexicographically greatest among labelings that respect an invariant
// refinement of the degree partition. Two families over the same (n, k) have
// equal forms iff they are isomorphic.
struct CanonicalForm {
  int n = 0;
  int k = 0;
  // Members of the relabeled family, lexicographic order.
  std::vector<VertexSet> sets;

  UniformFamily family() const { return UniformFamily::from_sets(n, k, sets); }

  bool operator==(const CanonicalForm&) const = default;
  std::strong_ordering operator<=>(const CanonicalForm& other) const;
};

// Throws GuardError when n > 12.
CanonicalForm canonical_form(const UniformFamily& family);

// Image of the family under x -> perm[x-1]; perm is a permutation of 1..n.
UniformFamily relabel(const UniformFamily& family, const std::vector<int>& perm);

bool are_isomorphic(const UniformFamily& a, const UniformFamily& b);

}  // namespace degree_forge
