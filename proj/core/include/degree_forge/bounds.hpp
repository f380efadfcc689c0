#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degree_forge/bigint.hpp"

namespace degree_forge {

enum class BoundId {
  EKR,      // |F| for t-intersecting F
  HM,       // |F| for non-trivial intersecting F
  COR12,    // d_1 for non-trivial intersecting F
  HZ,       // d_n
  D2,       // d_2
  D2K1,     // d_{2k+1}, n >= 6k-9
  D8K3,     // d_{ceil(8k/3)}
  TINT,     // d_{k+2} for t-intersecting F, n >= C(t+2,2) k^2
  D4,       // d_4, n >= 6k
  DLL,      // d_{l+1}, 4 <= l <= k, n > 2 l^2 k
  F87,      // |F| given d_1(F) <= d_1(H_l)
  SHIFTED,  // d_{2k-t+1} for shifted t-intersecting F
  PROP51,   // d_{1+tau_t} for saturated t-intersecting F with tau_t >= t+2 (strict)
  PROP45,   // d_{2k+1} for intersecting F with tau = 2 (strict)
};

std::string_view to_string(BoundId id);
std::optional<BoundId> parse_bound_id(std::string_view name);
const std::vector<BoundId>& all_bound_ids();

struct BoundParams {
  int n = 0;
  int k = 0;
  std::optional<int> t;
  std::optional<int> ell;
};

// Whether the bound constrains the family size or one of its sorted degrees.
enum class BoundedQuantity { size, degree };

// Extra condition on the family, beyond being (t-)intersecting, under which
// the theorem applies.
enum class FamilyCondition {
  none,
  non_trivial,      // empty total intersection
  max_degree_cap,   // d_1(F) <= condition_threshold
  shifted,
  tau_two,          // covering number exactly 2
  tau_at_least_t2,  // saturated with tau_t >= t+2
};

struct BoundEvaluation {
  BoundId id;
  BoundParams params;
  bool applicable = false;
  BigInt bound;
  bool strict = false;
  BoundedQuantity quantity = BoundedQuantity::degree;
  // Degree index for degree bounds; absent for size bounds and for PROP51,
  // whose index 1 + tau_t depends on the family.
  std::optional<int> index;
  // Intersection threshold the family must satisfy.
  int t = 1;
  FamilyCondition condition = FamilyCondition::none;
  std::optional<BigInt> condition_threshold;
  // Human-readable hypothesis on the parameters, e.g. "n > 2k".
  std::string hypothesis;

  // True when `value` satisfies the bound (respecting strictness).
  bool holds(const BigInt& value) const { return strict ? value < bound : value <= bound; }
};

// Evaluates the right-hand side and the parameter hypothesis of a bound.
// Throws ParameterError when a required parameter (t or ell) is missing or
// n, k are out of range.
BoundEvaluation evaluate(BoundId id, const BoundParams& params);

// ceil(a / b) for positive b.
constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace degree_forge
