#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "degree_forge/bounds.hpp"
#include "degree_forge/canonical.hpp"
#include "degree_forge/family.hpp"

namespace degree_forge {

enum class Restrict { all, shifted };

std::string_view to_string(Restrict r);
std::optional<Restrict> parse_restrict(std::string_view name);

struct SearchOptions {
  Restrict restrict = Restrict::all;
  int workers = 1;
  // Count isomorphism classes of the families that pass the restriction.
  bool classify = false;
  // Stop after this many enumerated families (0: no limit). A report cut
  // short this way has exhaustive = false.
  std::uint64_t max_families = 0;
};

struct IndexMax {
  int index = 0;
  std::int64_t max = 0;
  // Canonical form of the first family, in enumeration order, attaining max.
  CanonicalForm witness;
};

struct SearchReport {
  int n = 0;
  int k = 0;
  int t = 1;
  Restrict restrict = Restrict::all;
  // Entries for i = 1..n; empty when no family passes the restriction.
  std::vector<IndexMax> per_index_max;
  std::uint64_t families_enumerated = 0;
  std::uint64_t families_matched = 0;
  std::optional<std::uint64_t> isomorphism_classes;
  bool exhaustive = true;
  double wall_time_seconds = 0.0;
};

// max d_i over maximal t-intersecting families (optionally shifted ones).
SearchReport max_degree_profile(int n, int k, int t, const SearchOptions& options = {});

// Empty total intersection.
bool is_non_trivial(const UniformFamily& family);

enum class Verdict { pass, fail, inapplicable };
std::string_view to_string(Verdict v);

struct TheoremVerification {
  BoundEvaluation bound;
  Verdict verdict = Verdict::inapplicable;
  // Largest value of the bounded quantity over qualifying families.
  std::optional<std::int64_t> observed;
  std::uint64_t families_enumerated = 0;
  std::uint64_t families_qualifying = 0;
  // Canonical forms of qualifying families attaining `observed`, sorted.
  std::vector<CanonicalForm> extremal_witnesses;
  // Equality case: for D2 the extremal class is exactly {H_2}; for F87 every
  // family with |F| = |H_l| is H_l, or H_2 when l = 3. Absent elsewhere or
  // when the bound is not attained.
  std::optional<bool> equality_classification;
  std::string reason;
};

// Exhaustively checks one bound at (n, k) over maximal t-intersecting
// families satisfying the bound's family condition. t defaults to 1.
TheoremVerification verify_theorem(BoundId id, int n, int k, std::optional<int> t,
                                   std::optional<int> ell, int workers = 1);

enum class ProbeId { C71, C72, P110 };
std::string_view to_string(ProbeId id);
std::optional<ProbeId> parse_probe_id(std::string_view name);

// Evidence for an open statement; never a pass/fail verdict.
struct ProbeReport {
  ProbeId id = ProbeId::C71;
  int n = 0;
  int k = 0;
  int t = 1;
  std::optional<int> ell;
  std::uint64_t families_enumerated = 0;
  // C71: min over families of #{x : deg x <= threshold}; C72, P110: max d_index.
  std::string metric;
  std::int64_t observed = 0;
  std::optional<int> index;
  std::optional<BigInt> threshold;
  // Value the conjectured statement compares against.
  BigInt reference;
  bool consistent = false;
  CanonicalForm witness;
};

// C71 uses t = 1; C72 requires t; P110 requires ell.
ProbeReport conjecture_probe(ProbeId id, int n, int k, std::optional<int> t,
                             std::optional<int> ell, int workers = 1);

}  // namespace degree_forge
