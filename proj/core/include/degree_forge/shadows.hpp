#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "degree_forge/bigint.hpp"
#include "degree_forge/family.hpp"

namespace degree_forge {

// The (k-ell)-subsets of members. Requires 1 <= ell < k.
UniformFamily shadow(const UniformFamily& family, int ell);

// |shadow(C(n,k,m), ell)| for the colex initial segment C(n,k,m), built
// explicitly. Requires 0 <= m <= C(n,k) and 1 <= ell < k.
std::uint64_t kk_min_shadow(int n, int k, std::uint64_t m, int ell);

// Every member of `a` meets every member of `b`.
bool are_cross_intersecting(const UniformFamily& a, const UniformFamily& b);

struct CrossCheckReport {
  bool cross = false;
  // min(|A|,|B|) <= C(n-1,k-1), and equality only for identical full stars.
  // Evaluated when both uniformities equal k, n > 2k and the pair is cross.
  std::optional<bool> daykin_ok;
  bool daykin_equality = false;
  // The lex initial segments of sizes |A| and |B| are cross-intersecting.
  // Evaluated when the pair is cross and n >= a + b.
  std::optional<bool> lex_transfer_ok;
};

// Families must share n.
CrossCheckReport cross_check(const UniformFamily& a, const UniformFamily& b);

// One evaluated inequality with both exact sides.
struct InequalityResult {
  std::string id;      // COR21, COR22a, COR22b, LEM61, LEM62
  std::string params;  // e.g. "d=3"
  bool applicable = false;
  std::string lhs;
  std::string rhs;
  bool strict = false;
  bool pass = true;  // vacuously true when not applicable
};

struct CrossInequalityParams {
  std::optional<int> d;
  std::optional<int> r;
};

// Evaluates the Kruskal-Katona corollaries and the cross-intersecting lemmas
// whose hypotheses hold for this pair. Inapplicable entries are reported with
// applicable = false.
std::vector<InequalityResult> cross_inequalities(const UniformFamily& a, const UniformFamily& b,
                                                 const CrossInequalityParams& params);

}  // namespace degree_forge
