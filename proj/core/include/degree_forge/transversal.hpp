#pragma once

#include <optional>
#include <vector>

#include "degree_forge/family.hpp"

namespace degree_forge {

struct TransversalReport {
  int t = 1;
  // All T subset of [n], |T| <= k, meeting every member in >= t vertices,
  // in lexicographic order.
  std::vector<VertexSet> transversals;
  // Containment-minimal transversals, lexicographic order.
  std::vector<VertexSet> basis;
  // Covering number; absent when no transversal of size <= k exists.
  std::optional<int> tau;
};

// Throws PreconditionError for an empty family and ParameterError unless
// 1 <= t <= k.
TransversalReport transversal_report(const UniformFamily& family, int t);

// tau_t alone: the least size of a t-transversal within the ground set, or
// nothing when none of size <= k exists. Cheaper than transversal_report.
std::optional<int> covering_number(const UniformFamily& family, int t);

// <G>: all k-subsets of [n] containing some member of G. Throws
// ParameterError when a member is larger than k or leaves [n].
UniformFamily generated_family(const std::vector<VertexSet>& generators, int n, int k);

// The common pairwise intersection when all pairwise intersections agree.
// Throws ParameterError for fewer than two members.
std::optional<VertexSet> is_sunflower(const std::vector<VertexSet>& sets);

struct BasisLemmaReport {
  bool saturated = false;
  bool shifted = false;
  // Basis regenerates the family and, when n > 2k-t, is t-intersecting;
  // absent unless saturated.
  std::optional<bool> lemma31;
  // Every basis member lies in [2k-t]; absent unless saturated and shifted.
  std::optional<bool> lemma32;
  // |union of size-(t+1) basis members| <= k+1; absent unless saturated with
  // tau_t = t+1.
  std::optional<bool> claim54;
  TransversalReport transversal;
};

BasisLemmaReport check_basis_lemmas(const UniformFamily& family, int t);

}  // namespace degree_forge
