#pragma once

#include <optional>
#include <string_view>

#include "degree_forge/family.hpp"

namespace degree_forge {

// S_ij: replaces j by i in every member containing j but not i, unless the
// replacement is already a member. Requires 1 <= i < j <= n.
UniformFamily shift_ij(const UniformFamily& family, int i, int j);

// Shifting partial order: a_r <= b_r for the sorted elements of A and B.
// Throws ParameterError when |A| != |B|.
bool precedes(VertexSet a, VertexSet b);

// Downward-closed under precedes(). Checks single-element decrements only,
// which generate the order.
bool is_shifted(const UniformFamily& family);

// Applies shift_ij over all pairs in ascending (i, j) order until a full
// sweep changes nothing.
UniformFamily make_shifted(const UniformFamily& family);

enum class SaturationMode { lex_greedy, shift_alternate };

std::string_view to_string(SaturationMode mode);
std::optional<SaturationMode> parse_saturation_mode(std::string_view name);

// k-sets outside the family that could be added while keeping it t-intersecting.
std::vector<VertexSet> addable_sets(const UniformFamily& family, int t);

// t-intersecting and no k-set can be added.
bool is_saturated(const UniformFamily& family, int t);

// Maximal t-intersecting superset. lex_greedy scans all k-sets in lex order
// and adds each compatible one. shift_alternate alternates make_shifted and
// lex_greedy until the family is both shifted and saturated.
// Throws PreconditionError when the input is not t-intersecting.
UniformFamily saturate(const UniformFamily& family, int t, SaturationMode mode);

}  // namespace degree_forge
