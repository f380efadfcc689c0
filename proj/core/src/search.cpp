#include "degree_forge/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <set>
#include <string>

#include "degree_forge/constructions.hpp"
#include "degree_forge/enumerate.hpp"
#include "degree_forge/errors.hpp"
#include "degree_forge/transforms.hpp"
#include "degree_forge/transversal.hpp"

namespace degree_forge {

std::string_view to_string(Restrict r) { return r == Restrict::all ? "all" : "shifted"; }

std::optional<Restrict> parse_restrict(std::string_view name) {
  if (name == "all") return Restrict::all;
  if (name == "shifted") return Restrict::shifted;
  return std::nullopt;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inapplicable: return "inapplicable";
  }
  return "?";
}

std::string_view to_string(ProbeId id) {
  switch (id) {
    case ProbeId::C71: return "C71";
    case ProbeId::C72: return "C72";
    case ProbeId::P110: return "P110";
  }
  return "?";
}

std::optional<ProbeId> parse_probe_id(std::string_view name) {
  for (ProbeId id : {ProbeId::C71, ProbeId::C72, ProbeId::P110}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

bool is_non_trivial(const UniformFamily& family) {
  if (family.empty()) return false;
  VertexSet common = family[0];
  for (VertexSet s : family) common = common & s;
  return common.empty();
}

namespace {

// Non-increasing degrees over [n].
std::vector<std::int64_t> sorted_degrees(FamilyView f, int n) {
  std::vector<std::int64_t> deg(static_cast<std::size_t>(n), 0);
  for (VertexSet s : f) {
    for (VertexSet::Mask r = s.mask(); r != 0; r &= r - 1) {
      ++deg[static_cast<std::size_t>(std::countr_zero(r))];
    }
  }
  std::sort(deg.begin(), deg.end(), std::greater<>());
  return deg;
}

UniformFamily materialize(FamilyView f, int n, int k) {
  return UniformFamily::from_sets(n, k, std::vector<VertexSet>(f.begin(), f.end()));
}

// Re-verification of every reported witness.
void check_witness(const UniformFamily& f, int t) {
  if (!is_t_intersecting(f, t) || !is_saturated(f, t)) {
    throw Error("internal: witness is not a maximal t-intersecting family");
  }
}

struct ProfileAcc {
  std::uint64_t enumerated = 0;
  std::uint64_t matched = 0;
  std::vector<std::int64_t> max;
  std::vector<std::vector<VertexSet>> witness;
  std::set<CanonicalForm> classes;
};

}  // namespace

SearchReport max_degree_profile(int n, int k, int t, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  MaximalFamilyEnumerator e(n, k, t);
  ProfileAcc init;
  init.max.assign(static_cast<std::size_t>(n), -1);
  init.witness.resize(static_cast<std::size_t>(n));

  std::atomic<std::uint64_t> seen{0};
  std::atomic<bool> stop{false};
  auto parts = enumerate_branches(e, options.workers, init, [&](ProfileAcc& acc, FamilyView f) {
    if (options.max_families != 0 && seen.fetch_add(1) >= options.max_families) {
      stop = true;
      return;
    }
    ++acc.enumerated;
    if (options.restrict == Restrict::shifted && !is_shifted(materialize(f, n, k))) return;
    ++acc.matched;
    const auto deg = sorted_degrees(f, n);
    for (std::size_t i = 0; i < deg.size(); ++i) {
      if (deg[i] > acc.max[i]) {
        acc.max[i] = deg[i];
        acc.witness[i].assign(f.begin(), f.end());
      }
    }
    if (options.classify) acc.classes.insert(canonical_form(materialize(f, n, k)));
  }, &stop);

  ProfileAcc total = init;
  for (auto& part : parts) {
    total.enumerated += part.enumerated;
    total.matched += part.matched;
    for (std::size_t i = 0; i < total.max.size(); ++i) {
      if (part.max[i] > total.max[i]) {
        total.max[i] = part.max[i];
        total.witness[i] = std::move(part.witness[i]);
      }
    }
    if (options.classify) total.classes.merge(part.classes);
  }

  SearchReport report;
  report.n = n;
  report.k = k;
  report.t = t;
  report.restrict = options.restrict;
  report.families_enumerated = total.enumerated;
  report.families_matched = total.matched;
  report.exhaustive = !stop;
  if (options.classify) report.isomorphism_classes = total.classes.size();
  if (total.matched > 0) {
    for (int i = 1; i <= n; ++i) {
      const auto at = static_cast<std::size_t>(i - 1);
      const UniformFamily w = UniformFamily::from_sets(n, k, total.witness[at]);
      check_witness(w, t);
      report.per_index_max.push_back({i, total.max[at], canonical_form(w)});
    }
  }
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

struct ExtremeAcc {
  std::uint64_t enumerated = 0;
  std::uint64_t qualifying = 0;
  std::optional<std::int64_t> best;
  std::vector<std::vector<VertexSet>> attaining;
};

}  // namespace

TheoremVerification verify_theorem(BoundId id, int n, int k, std::optional<int> t,
                                   std::optional<int> ell, int workers) {
  TheoremVerification out;
  BoundParams params{n, k, t, ell};
  if (!params.t) params.t = 1;
  out.bound = evaluate(id, params);
  const BoundEvaluation& ev = out.bound;
  if (!ev.applicable) {
    out.verdict = Verdict::inapplicable;
    out.reason = "hypothesis fails: " + ev.hypothesis;
    return out;
  }
  const int tt = ev.t;
  MaximalFamilyEnumerator e(n, k, tt);

  // Value of the bounded quantity, or nothing when the family does not qualify.
  auto measure = [&](FamilyView f) -> std::optional<std::int64_t> {
    const bool need_family = ev.condition == FamilyCondition::non_trivial ||
                             ev.condition == FamilyCondition::shifted ||
                             ev.condition == FamilyCondition::tau_two ||
                             ev.condition == FamilyCondition::tau_at_least_t2;
    std::optional<UniformFamily> fam;
    if (need_family) fam = materialize(f, n, k);
    const auto deg = sorted_degrees(f, n);
    std::optional<int> tau;
    switch (ev.condition) {
      case FamilyCondition::none:
        break;
      case FamilyCondition::non_trivial:
        if (!is_non_trivial(*fam)) return std::nullopt;
        break;
      case FamilyCondition::max_degree_cap:
        if (BigInt(deg[0]) > *ev.condition_threshold) return std::nullopt;
        break;
      case FamilyCondition::shifted:
        if (!is_shifted(*fam)) return std::nullopt;
        break;
      case FamilyCondition::tau_two:
        tau = covering_number(*fam, tt);
        if (tau != 2) return std::nullopt;
        break;
      case FamilyCondition::tau_at_least_t2:
        tau = covering_number(*fam, tt);
        if (tau && *tau < tt + 2) return std::nullopt;
        break;
    }
    if (ev.quantity == BoundedQuantity::size) return static_cast<std::int64_t>(f.size());
    int index = ev.index ? *ev.index : 1 + (tau ? *tau : k + 1);
    if (index > n) return std::nullopt;
    return deg[static_cast<std::size_t>(index - 1)];
  };

  auto parts = enumerate_branches(e, workers, ExtremeAcc{}, [&](ExtremeAcc& acc, FamilyView f) {
    ++acc.enumerated;
    const auto value = measure(f);
    if (!value) return;
    ++acc.qualifying;
    if (!acc.best || *value > *acc.best) {
      acc.best = value;
      acc.attaining.clear();
    }
    if (*value == *acc.best) acc.attaining.emplace_back(f.begin(), f.end());
  });

  std::vector<std::vector<VertexSet>> attaining;
  for (auto& part : parts) {
    out.families_enumerated += part.enumerated;
    out.families_qualifying += part.qualifying;
    if (!part.best) continue;
    if (!out.observed || *part.best > *out.observed) {
      out.observed = part.best;
      attaining.clear();
    }
    if (*part.best == *out.observed) {
      for (auto& a : part.attaining) attaining.push_back(std::move(a));
    }
  }

  std::set<CanonicalForm> forms;
  for (const auto& sets : attaining) {
    const UniformFamily f = UniformFamily::from_sets(n, k, sets);
    check_witness(f, tt);
    forms.insert(canonical_form(f));
  }
  out.extremal_witnesses.assign(forms.begin(), forms.end());

  if (!out.observed) {
    out.verdict = Verdict::pass;
    out.reason = "no qualifying families";
    return out;
  }
  out.verdict = ev.holds(BigInt(*out.observed)) ? Verdict::pass : Verdict::fail;
  const bool attained = BigInt(*out.observed) == ev.bound;
  if (attained && id == BoundId::D2) {
    const auto h2 = canonical_form(build({ConstructionKind::h_ell, n, k, 2}));
    out.equality_classification = forms.size() == 1 && *forms.begin() == h2;
  } else if (attained && id == BoundId::F87) {
    std::set<CanonicalForm> allowed{canonical_form(build({ConstructionKind::h_ell, n, k, *ell}))};
    if (*ell == 3) allowed.insert(canonical_form(build({ConstructionKind::h_ell, n, k, 2})));
    out.equality_classification = std::all_of(forms.begin(), forms.end(), [&](const CanonicalForm& c) {
      return allowed.count(c) > 0;
    });
  }
  if (out.equality_classification == false) out.verdict = Verdict::fail;
  return out;
}

ProbeReport conjecture_probe(ProbeId id, int n, int k, std::optional<int> t,
                             std::optional<int> ell, int workers) {
  ProbeReport r;
  r.id = id;
  r.n = n;
  r.k = k;
  r.ell = ell;
  bool minimize = false;
  switch (id) {
    case ProbeId::C71:
      r.t = 1;
      r.metric = "min_low_degree_vertices";
      r.threshold = binom(n - 2, k - 2);
      r.reference = BigInt(n - 2 * k);
      minimize = true;
      break;
    case ProbeId::C72:
      if (!t) throw ParameterError("probe C72 requires t");
      r.t = *t;
      r.metric = "max_degree";
      r.index = k + 2;
      r.reference = binom(n - r.t - 1, k - r.t - 1);
      break;
    case ProbeId::P110:
      if (!ell || *ell < 1) throw ParameterError("probe P110 requires ell >= 1");
      r.t = 1;
      r.metric = "max_degree";
      r.index = *ell + 1;
      r.reference = binom(n - 2, k - 2) + binom(n - *ell - 1, k - *ell);
      break;
  }
  if (r.index && *r.index > n) {
    throw ParameterError("degree index " + std::to_string(*r.index) + " exceeds n=" + std::to_string(n));
  }
  MaximalFamilyEnumerator e(n, k, r.t);
  const std::int64_t threshold = r.threshold ? r.threshold->convert_to<std::int64_t>() : 0;
  auto score = [&](FamilyView f) -> std::int64_t {
    const auto deg = sorted_degrees(f, n);
    if (id == ProbeId::C71) {
      return std::count_if(deg.begin(), deg.end(), [&](std::int64_t d) { return d <= threshold; });
    }
    return deg[static_cast<std::size_t>(*r.index - 1)];
  };
  auto parts = enumerate_branches(e, workers, ExtremeAcc{}, [&](ExtremeAcc& acc, FamilyView f) {
    ++acc.enumerated;
    const std::int64_t v = score(f);
    if (!acc.best || (minimize ? v < *acc.best : v > *acc.best)) {
      acc.best = v;
      acc.attaining.assign(1, std::vector<VertexSet>(f.begin(), f.end()));
    }
  });
  std::optional<std::int64_t> best;
  std::vector<VertexSet> witness;
  for (auto& part : parts) {
    r.families_enumerated += part.enumerated;
    if (part.best && (!best || (minimize ? *part.best < *best : *part.best > *best))) {
      best = part.best;
      witness = std::move(part.attaining.front());
    }
  }
  r.observed = best.value_or(0);
  const UniformFamily w = UniformFamily::from_sets(n, k, witness);
  check_witness(w, r.t);
  r.witness = canonical_form(w);
  r.consistent = minimize ? BigInt(r.observed) >= r.reference : BigInt(r.observed) <= r.reference;
  return r;
}

}  // namespace degree_forge
