#include <gtest/gtest.h>

#include <random>

#include "degree_forge/constructions.hpp"
#include "degree_forge/errors.hpp"
#include "degree_forge/transforms.hpp"
#include "degree_forge/transversal.hpp"
#include "oracles.hpp"

using namespace degree_forge;

namespace {

VertexSet vs(std::initializer_list<int> v) { return VertexSet::of(v); }

// All subsets of [n] of size <= k meeting each member in >= t, lex order.
std::vector<oracle::Set> transversals_oracle(const oracle::Family& f, int n, int k, int t) {
  std::vector<oracle::Set> out;
  for (int size = 0; size <= k; ++size) {
    for (const auto& s : oracle::k_subsets(n, size)) {
      bool ok = true;
      for (const auto& m : f) ok = ok && oracle::meet(s, m) >= t;
      if (ok) out.push_back(s);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<oracle::Set> to_sets(const std::vector<VertexSet>& v) {
  std::vector<oracle::Set> out;
  for (auto s : v) out.push_back(s.elements());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(TransversalReport, StarAtOne) {
  const auto r = transversal_report(build({ConstructionKind::star, 7, 3, 1}), 1);
  EXPECT_EQ(r.tau, 1);
  EXPECT_EQ(r.basis, (std::vector<VertexSet>{vs({1})}));
}

TEST(TransversalReport, TriangleFamily) {
  const auto r = transversal_report(build({ConstructionKind::h_ell, 7, 3, 2}), 1);
  EXPECT_EQ(r.tau, 2);
  EXPECT_EQ(r.basis, (std::vector<VertexSet>{vs({1, 2}), vs({1, 3}), vs({2, 3})}));
}

TEST(TransversalReport, TwoDisjointPairs) {
  const auto f = UniformFamily::from_sets(5, 2, {vs({1, 2}), vs({3, 4})});
  const auto r = transversal_report(f, 1);
  EXPECT_EQ(r.tau, 2);
  EXPECT_EQ(r.basis, (std::vector<VertexSet>{vs({1, 3}), vs({1, 4}), vs({2, 3}), vs({2, 4})}));
}

TEST(TransversalReport, Errors) {
  EXPECT_THROW(transversal_report(UniformFamily(5, 2), 1), PreconditionError);
  EXPECT_THROW(transversal_report(build({ConstructionKind::star, 5, 2, 1}), 3), ParameterError);
}

TEST(TransversalReport, RandomFamiliesMatchOracle) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % 3);
    if (k > n) continue;
    const int t = 1 + static_cast<int>(rng() % k);
    const auto f = oracle::random_family(rng, n, k, 1 + static_cast<int>(rng() % 6));
    const auto r = transversal_report(f, t);
    const auto want = transversals_oracle(oracle::to_family(f), n, k, t);
    EXPECT_EQ(to_sets(r.transversals), want);
    for (auto b : r.basis) {
      for (auto c : r.basis) {
        if (b != c) {
          EXPECT_FALSE(c.subset_of(b));
        }
      }
    }
    if (want.empty()) {
      EXPECT_FALSE(r.tau);
    } else {
      std::size_t least = want.front().size();
      for (const auto& s : want) least = std::min(least, s.size());
      EXPECT_EQ(r.tau, static_cast<int>(least));
      EXPECT_EQ(covering_number(f, t), r.tau);
    }
    // tau_t = t iff some t-set lies in every member.
    bool common_t_set = false;
    for (const auto& s : oracle::k_subsets(n, t)) {
      bool inside = true;
      for (auto m : f) inside = inside && oracle::meet(s, m.elements()) == t;
      common_t_set = common_t_set || inside;
    }
    EXPECT_EQ(r.tau == t, common_t_set);
  }
}

TEST(GeneratedFamily, Examples) {
  EXPECT_EQ(generated_family({vs({1})}, 5, 2), build({ConstructionKind::star, 5, 2, 1}));
  EXPECT_EQ(generated_family({vs({1, 2}), vs({1, 3}), vs({2, 3})}, 7, 3),
            build({ConstructionKind::h_ell, 7, 3, 2}));
  EXPECT_TRUE(generated_family({}, 7, 3).empty());
  EXPECT_THROW(generated_family({vs({1, 2, 3, 4})}, 7, 3), ParameterError);
}

TEST(Sunflower, Examples) {
  EXPECT_EQ(is_sunflower({vs({1, 2}), vs({1, 3}), vs({1, 4})}), vs({1}));
  EXPECT_FALSE(is_sunflower({vs({1, 2}), vs({1, 3}), vs({2, 3})}));
  EXPECT_EQ(is_sunflower({vs({1, 2, 3}), vs({1, 2, 4}), vs({1, 2, 5})}), vs({1, 2}));
  EXPECT_THROW(is_sunflower({vs({1, 2})}), ParameterError);
}

TEST(BasisLemmas, Examples) {
  const auto star = check_basis_lemmas(build({ConstructionKind::star, 7, 3, 1}), 1);
  EXPECT_TRUE(star.saturated);
  EXPECT_EQ(star.lemma31, true);
  EXPECT_EQ(star.lemma32, true);

  const auto h2 = check_basis_lemmas(build({ConstructionKind::h_ell, 7, 3, 2}), 1);
  EXPECT_EQ(h2.lemma31, true);
  EXPECT_EQ(h2.claim54, true);

  const auto partial = check_basis_lemmas(UniformFamily::from_sets(7, 3, {vs({1, 2, 3})}), 1);
  EXPECT_FALSE(partial.saturated);
  EXPECT_FALSE(partial.lemma31);
  EXPECT_FALSE(partial.lemma32);

  // All 4-subsets of [5] are pairwise 2-intersecting; the basis is every
  // 3-set, which regenerates the family but is not 2-intersecting.
  const auto complete = check_basis_lemmas(UniformFamily::from_sets(5, 4, all_k_sets(5, 4)), 2);
  EXPECT_TRUE(complete.saturated);
  EXPECT_EQ(complete.transversal.basis.size(), 10u);
  EXPECT_EQ(complete.lemma31, true);
}

TEST(BasisLemmas, ShiftedSaturatedFamilies) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 5);
    const int k = 2 + static_cast<int>(rng() % 3);
    const int t = 1 + static_cast<int>(rng() % 2);
    if (t >= k) continue;
    const auto seed = oracle::random_intersecting(rng, n, k, t, 4);
    const auto f = saturate(seed, t, SaturationMode::shift_alternate);
    const auto r = check_basis_lemmas(f, t);
    ASSERT_TRUE(r.saturated);
    ASSERT_TRUE(r.shifted);
    EXPECT_EQ(r.lemma31, true);
    EXPECT_EQ(r.lemma32, true);
    if (n > 2 * k - t) {
      EXPECT_TRUE(oracle::intersecting(to_sets(r.transversal.basis), t));
    }
    EXPECT_EQ(generated_family(r.transversal.basis, n, k), f);
    if (r.claim54) {
      EXPECT_TRUE(*r.claim54);
    }
  }
}
