#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "degree_forge/bigint.hpp"
#include "degree_forge/family.hpp"

namespace degree_forge {

enum class ConstructionKind {
  star,           // all k-sets containing param
  h_ell,          // 1 in H and H meets [2, l+1], or [2, l+1] subset of H; param = l
  h_nkt,          // [t] subset of H meeting [t+1, k+1], plus [k+1] \ {j} for j <= t; param = t
  l_r,            // |F cap [2r-1]| >= r; param = r
  lex_segment,    // first m k-sets in lex order; param = m
  colex_segment,  // first m k-sets in colex order; param = m
  triangle,       // |F cap [3]| >= 2; param unused
};

std::string_view to_string(ConstructionKind kind);
std::optional<ConstructionKind> parse_construction_kind(std::string_view name);

struct ConstructionSpec {
  ConstructionKind kind = ConstructionKind::star;
  int n = 0;
  int k = 0;
  std::int64_t param = 0;
};

// Throws ParameterError when the parameter is outside its range.
void validate(const ConstructionSpec& spec);

UniformFamily build(const ConstructionSpec& spec);

// The Hilton-Milner family is H_l with l = k.
inline ConstructionSpec hilton_milner(int n, int k) {
  return {ConstructionKind::h_ell, n, k, k};
}

struct ClosedForm {
  BigInt size;
  // Predicted d_i, keyed by the 1-based sorted index i.
  std::map<int, BigInt> degree_profile;
};

// Exact size and degree predictions. Throws UnsupportedError for segments.
ClosedForm closed_form(const ConstructionSpec& spec);

// First m k-subsets of [n] in lex / colex order.
std::vector<VertexSet> lex_initial_segment(int n, int k, std::uint64_t m);
std::vector<VertexSet> colex_initial_segment(int n, int k, std::uint64_t m);

}  // namespace degree_forge
