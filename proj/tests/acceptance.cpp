// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.
// Limits are wall-clock seconds on one worker.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "degree_forge/bounds.hpp"
#include "degree_forge/canonical.hpp"
#include "degree_forge/constructions.hpp"
#include "degree_forge/enumerate.hpp"
#include "degree_forge/errors.hpp"
#include "degree_forge/search.hpp"
#include "degree_forge/shadows.hpp"
#include "degree_forge/sweep.hpp"
#include "degree_forge/transforms.hpp"
#include "degree_forge/transversal.hpp"
#include "emit.hpp"
#include "oracles.hpp"

using namespace degree_forge;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "violated: " << what << "; ";
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<void(Outcome&)> body;
};

UniformFamily star(int n, int k) { return build({ConstructionKind::star, n, k, 1}); }

bool has_witness(const TheoremVerification& v, const CanonicalForm& form) {
  return std::find(v.extremal_witnesses.begin(), v.extremal_witnesses.end(), form) != v.extremal_witnesses.end();
}

void formula_grid(Outcome& o) {
  int checked = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= std::min(5, n); ++k) {
      std::vector<ConstructionSpec> specs;
      for (int x = 1; x <= n; ++x) specs.push_back({ConstructionKind::star, n, k, x});
      for (int ell = 2; ell <= k && ell + 1 <= n; ++ell) specs.push_back({ConstructionKind::h_ell, n, k, ell});
      for (int t = 1; t < k && k + 1 <= n; ++t) specs.push_back({ConstructionKind::h_nkt, n, k, t});
      for (int r = 1; r <= k && 2 * r - 1 <= n; ++r) specs.push_back({ConstructionKind::l_r, n, k, r});
      for (const auto& spec : specs) {
        const auto f = build(spec);
        const auto cf = closed_form(spec);
        const auto d = oracle::degrees(oracle::to_family(f), n);
        std::ostringstream tag;
        tag << to_string(spec.kind) << "(" << n << "," << k << "," << spec.param << ")";
        o.require(cf.size == BigInt(f.size()), tag.str() + " size");
        for (const auto& [i, value] : cf.degree_profile) {
          o.require(value == BigInt(d[static_cast<std::size_t>(i - 1)]), tag.str() + " d_" + std::to_string(i));
        }
        if (spec.kind == ConstructionKind::h_nkt) {
          const int t = static_cast<int>(spec.param);
          const auto plain = binom(n - t - 1, k - t - 1) + t;
          for (int i = t + 1; i <= k + 1; ++i) {
            o.require(BigInt(d[static_cast<std::size_t>(i - 1)]) == plain, tag.str() + " identity");
          }
        }
        ++checked;
      }
    }
  }
  o.detail << checked << " constructions";
}

void second_degree_at_seven(Outcome& o) {
  SearchOptions opts;
  opts.classify = true;
  const auto r = max_degree_profile(7, 3, 1, opts);
  const auto want = binom(5, 1) + binom(4, 1);
  o.require(BigInt(r.per_index_max[1].max) == want, "max d_2 = 9");
  o.require(BigInt(r.per_index_max[2].max) == want, "max d_3 = 9");
  const auto v = verify_theorem(BoundId::D2, 7, 3, 1, std::nullopt);
  const auto h2 = canonical_form(build({ConstructionKind::h_ell, 7, 3, 2}));
  o.require(v.verdict == Verdict::pass, "verdict pass");
  o.require(v.extremal_witnesses == std::vector<CanonicalForm>{h2}, "unique extremal class is H_2");
  o.detail << "max d_2=" << r.per_index_max[1].max << " max d_3=" << r.per_index_max[2].max
           << " extremal classes=" << v.extremal_witnesses.size() << " of " << *r.isomorphism_classes;
}

void min_degree_at_seven_and_eight(Outcome& o) {
  for (int n : {7, 8}) {
    const auto v = verify_theorem(BoundId::HZ, n, 3, 1, std::nullopt);
    const auto cap = binom(n - 2, 1);
    o.require(v.verdict == Verdict::pass, "verdict pass at n=" + std::to_string(n));
    o.require(v.observed && BigInt(*v.observed) == cap, "equality attained at n=" + std::to_string(n));
    o.require(has_witness(v, canonical_form(star(n, 3))), "star attains equality at n=" + std::to_string(n));
    o.detail << "n=" << n << " max d_n=" << v.observed.value_or(-1) << " <= " << cap << "; ";
  }
}

void eighth_degree_at_eight(Outcome& o) {
  const auto v = verify_theorem(BoundId::D8K3, 8, 3, 1, std::nullopt);
  o.require(v.verdict == Verdict::pass, "verdict pass");
  o.require(v.bound.index == 8 && v.bound.bound == 6, "bound is d_8 <= 6");
  // Second route: the unrestricted search profile.
  const auto r = max_degree_profile(8, 3, 1);
  o.require(r.per_index_max[7].max <= 6, "profile d_8 <= 6");
  o.require(v.observed == r.per_index_max[7].max, "routes agree");
  o.detail << "max d_8=" << r.per_index_max[7].max << " <= 6";
}

void shifted_families(Outcome& o) {
  for (auto [n, k, t, cap] : {std::tuple{7, 4, 2, 4}, {7, 3, 1, 5}}) {
    const auto v = verify_theorem(BoundId::SHIFTED, n, k, t, std::nullopt);
    const auto r = max_degree_profile(n, k, t, {Restrict::shifted, 1, false});
    const int index = 2 * k - t + 1;
    const auto observed = r.per_index_max[static_cast<std::size_t>(index - 1)].max;
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(t) + ")";
    o.require(v.verdict == Verdict::pass, "verdict pass " + tag);
    o.require(observed <= cap, "profile bound " + tag);
    o.require(v.observed == observed, "routes agree " + tag);
    o.detail << tag << " max d_" << index << "=" << observed << " <= " << cap << " over " << r.families_matched
             << " shifted; ";
  }
}

void d7_at_nine(Outcome& o) {
  const auto v = verify_theorem(BoundId::D2K1, 9, 3, 1, std::nullopt);
  o.require(v.bound.applicable, "hypothesis n >= 6k-9 holds");
  o.require(v.verdict == Verdict::pass, "verdict pass");
  o.require(v.observed && *v.observed <= 7, "max d_7 <= 7");
  o.detail << "max d_7=" << v.observed.value_or(-1) << " <= 7 over " << v.families_enumerated << " families";
}

std::pair<UniformFamily, UniformFamily> random_cross_pair(std::mt19937_64& rng, int n, int a, int b) {
  const auto fa = oracle::random_intersecting(rng, n, a, 1, 1 + static_cast<int>(rng() % 6));
  oracle::Family pool;
  for (const auto& s : oracle::k_subsets(n, b)) {
    bool ok = true;
    for (auto m : fa) ok = ok && oracle::meet(s, m.elements()) > 0;
    if (ok && rng() % 3 != 0) pool.push_back(s);
  }
  return {fa, oracle::from_family(n, b, pool)};
}

void kruskal_katona(Outcome& o) {
  std::mt19937_64 rng(701);
  int shadows = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 8);
    const int k = 2 + static_cast<int>(rng() % std::min(4, n - 1));
    const auto f = oracle::random_family(rng, n, k, 1 + static_cast<int>(rng() % 30));
    for (int ell = 1; ell < k; ++ell, ++shadows) {
      o.require(shadow(f, ell).size() >= kk_min_shadow(n, k, f.size(), ell), "shadow size");
    }
  }
  int pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int a = 2 + static_cast<int>(rng() % 2);
    const int b = 2 + static_cast<int>(rng() % 3);
    const auto [fa, fb] = random_cross_pair(rng, 9, a, b);
    const auto r = cross_check(fa, fb);
    o.require(r.cross, "generated pair is cross-intersecting");
    o.require(r.lex_transfer_ok.value_or(false), "lex transfer");
    ++pairs;
  }
  o.detail << shadows << " shadows, " << pairs << " cross pairs";
}

void daykin(Outcome& o) {
  std::mt19937_64 rng(801);
  int pairs = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [a, b] = random_cross_pair(rng, 9, 3, 3);
    const auto r = cross_check(a, b);
    o.require(r.daykin_ok.value_or(false), "min(|A|,|B|) <= 28");
    o.require(std::min(a.size(), b.size()) <= 28, "direct size check");
    ++pairs;
  }
  const auto s = cross_check(star(9, 3), star(9, 3));
  o.require(s.daykin_ok.value_or(false) && s.daykin_equality, "star pair equality");
  o.detail << pairs << " pairs, star/star equality=" << (s.daykin_equality ? "yes" : "no");
}

void basis_lemmas(Outcome& o) {
  std::mt19937_64 rng(901);
  int done = 0;
  while (done < 200) {
    const int n = 5 + static_cast<int>(rng() % 6);
    const int k = 2 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 2);
    if (t >= k) continue;
    const auto seed = oracle::random_intersecting(rng, n, k, t, 4);
    const auto f = saturate(seed, t, SaturationMode::shift_alternate);
    const auto r = check_basis_lemmas(f, t);
    o.require(r.saturated && r.shifted, "shift_alternate output is shifted and saturated");
    o.require(r.lemma31 == true, "basis regenerates the family");
    o.require(generated_family(r.transversal.basis, n, k) == f, "regeneration recomputed");
    o.require(r.lemma32 == true, "basis inside [2k-t]");
    for (const auto b : r.transversal.basis) o.require(b.max() <= 2 * k - t, "basis element bound recomputed");
    for (int i = 2 * k - t + 1; i <= n; ++i) {
      const auto l = link(f, VertexSet::of({i}), VertexSet::of({i}));
      o.require(oracle::intersecting(oracle::to_family(l), t), "link beyond 2k-t is t-intersecting");
    }
    ++done;
  }
  o.detail << done << " families";
}

void sweeps(Outcome& o) {
  std::uint64_t points = 0;
  for (SweepId id : all_sweep_ids()) {
    const auto r = inequality_sweep(id, default_grid(id));
    o.require(r.pass && r.violations.empty(), std::string(to_string(id)) + " has no violations");
    const auto in_hypothesis = r.points_evaluated - r.points_out_of_hypothesis;
    o.require(in_hypothesis > 0, std::string(to_string(id)) + " evaluates points");
    points += in_hypothesis;
    o.detail << to_string(id) << "=" << in_hypothesis << " ";
  }
  o.detail << "(" << points << " points)";
}

void oracle_equivalence(Outcome& o) {
  std::set<oracle::Family> got, want;
  const auto fams = enumerate_maximal(5, 2, 1);
  for (const auto& f : fams) {
    auto key = oracle::to_family(f);
    std::sort(key.begin(), key.end());
    got.insert(key);
  }
  for (auto f : oracle::brute_maximal(5, 2, 1)) {
    std::sort(f.begin(), f.end());
    want.insert(f);
  }
  o.require(fams.size() == 15 && got.size() == 15, "15 distinct families");
  o.require(got == want, "same set as brute force");
  o.detail << fams.size() << " enumerated, " << want.size() << " by brute force";
}

void probes(Outcome& o) {
  struct P {
    ProbeId id;
    int n, k;
    std::optional<int> t;
  };
  for (const auto& p : {P{ProbeId::C71, 7, 3, std::nullopt}, P{ProbeId::C71, 8, 3, std::nullopt},
                        P{ProbeId::C72, 7, 4, 2}}) {
    const auto first = cli::probe_to_json(conjecture_probe(p.id, p.n, p.k, p.t, std::nullopt)).dump();
    const auto second = cli::probe_to_json(conjecture_probe(p.id, p.n, p.k, p.t, std::nullopt)).dump();
    const auto wide = cli::probe_to_json(conjecture_probe(p.id, p.n, p.k, p.t, std::nullopt, 3)).dump();
    const auto r = conjecture_probe(p.id, p.n, p.k, p.t, std::nullopt);
    o.require(first == second && first == wide, "byte-reproducible");
    o.require(r.families_enumerated > 0, "report has evidence");
    o.detail << to_string(p.id) << "(" << p.n << "," << p.k << ") " << r.metric << "=" << r.observed
             << " ref " << to_string(r.reference) << "; ";
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "formula grid n<=12 k<=5", 10, formula_grid},
      {2, "max d_2 = max d_3 = 9 at (7,3), unique class H_2", 60, second_degree_at_seven},
      {3, "d_n <= C(n-2,k-2) at (7,3) and (8,3), stars extremal", 300, min_degree_at_seven_and_eight},
      {4, "d_8 <= 6 at (8,3)", 300, eighth_degree_at_eight},
      {5, "shifted d_{2k-t+1} bound at (7,4,2) and (7,3,1)", 300, shifted_families},
      {6, "d_7 <= 7 at (9,3)", 1800, d7_at_nine},
      {7, "Kruskal-Katona and lex transfer suites", 30, kruskal_katona},
      {8, "Daykin suite at (9,3)", 30, daykin},
      {9, "basis lemmas on 200 shifted saturated families", 120, basis_lemmas},
      {10, "inequality sweeps", 30, sweeps},
      {11, "enumeration equals brute force at (5,2,1)", 1, oracle_equivalence},
      {12, "conjecture probes reproducible", 300, probes},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs <= c.limit_seconds, "time limit");
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << std::setw(2) << c.id << "  " << c.name << "  [" << std::fixed
              << std::setprecision(2) << secs << " s / " << std::setprecision(0) << c.limit_seconds << " s]  "
              << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
