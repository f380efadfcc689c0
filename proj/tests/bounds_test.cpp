#include <gtest/gtest.h>

#include "degree_forge/bigint.hpp"
#include "degree_forge/bounds.hpp"
#include "degree_forge/constructions.hpp"
#include "degree_forge/errors.hpp"
#include "degree_forge/sweep.hpp"
#include "oracles.hpp"

using namespace degree_forge;

namespace {

BoundEvaluation ev(BoundId id, int n, int k, std::optional<int> t = std::nullopt,
                   std::optional<int> ell = std::nullopt) {
  return evaluate(id, {n, k, t, ell});
}

BigInt closed_degree(ConstructionKind kind, int n, int k, int p, int i) {
  return closed_form({kind, n, k, p}).degree_profile.at(i);
}

}  // namespace

TEST(Binom, Examples) {
  EXPECT_EQ(binom(5, 2), 10);
  EXPECT_EQ(binom(4, 7), 0);
  EXPECT_EQ(binom(0, 0), 1);
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(-3, 1), 0);
}

TEST(Binom, PascalGridAgainstOracle) {
  for (int n = 0; n <= 80; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(to_string(binom(n, k)), oracle::u128_string(oracle::binom128(n, k)));
      if (n > 0 && k > 0) {
        EXPECT_EQ(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
      }
    }
  }
}

TEST(Evaluate, Examples) {
  const auto d2 = ev(BoundId::D2, 7, 3);
  EXPECT_TRUE(d2.applicable);
  EXPECT_EQ(d2.bound, 9);
  EXPECT_EQ(d2.index, 2);
  EXPECT_FALSE(ev(BoundId::D2K1, 8, 3).applicable);
  const auto hz = ev(BoundId::HZ, 7, 3);
  EXPECT_TRUE(hz.applicable);
  EXPECT_EQ(hz.bound, 5);
  EXPECT_EQ(hz.index, 7);
  EXPECT_FALSE(ev(BoundId::HZ, 6, 3).applicable);
  EXPECT_FALSE(ev(BoundId::D4, 7, 3).applicable);
  EXPECT_TRUE(ev(BoundId::D4, 18, 3).applicable);
}

TEST(Evaluate, MissingParameters) {
  EXPECT_THROW(ev(BoundId::EKR, 7, 3), ParameterError);
  EXPECT_THROW(ev(BoundId::TINT, 7, 3), ParameterError);
  EXPECT_THROW(ev(BoundId::SHIFTED, 7, 3), ParameterError);
  EXPECT_THROW(ev(BoundId::PROP51, 7, 3), ParameterError);
  EXPECT_THROW(ev(BoundId::DLL, 7, 3), ParameterError);
  EXPECT_THROW(ev(BoundId::F87, 7, 3), ParameterError);
}

TEST(Evaluate, Strictness) {
  for (BoundId id : all_bound_ids()) {
    const bool strict = id == BoundId::PROP51 || id == BoundId::PROP45;
    const auto e = ev(id, 40, 4, 1, 4);
    EXPECT_EQ(e.strict, strict) << to_string(id);
    EXPECT_EQ(e.holds(e.bound), !strict);
    EXPECT_TRUE(e.holds(e.bound - 1));
    EXPECT_FALSE(e.holds(e.bound + 1));
  }
}

TEST(Evaluate, CeilingIndex) {
  for (int k = 1; k <= 30; ++k) {
    const auto e = ev(BoundId::D8K3, 200, k);
    ASSERT_TRUE(e.index);
    EXPECT_EQ(*e.index, (8 * k + 2) / 3);
    EXPECT_GE(3 * *e.index, 8 * k);
    EXPECT_LT(3 * (*e.index - 1), 8 * k);
  }
}

TEST(Evaluate, HypothesisEdges) {
  EXPECT_TRUE(ev(BoundId::D2K1, 9, 3).applicable);
  EXPECT_FALSE(ev(BoundId::D8K3, 7, 3).applicable);
  EXPECT_TRUE(ev(BoundId::D8K3, 8, 3).applicable);
  EXPECT_FALSE(ev(BoundId::TINT, 35, 4, 1).applicable);
  EXPECT_TRUE(ev(BoundId::TINT, 48, 4, 1).applicable);
  EXPECT_FALSE(ev(BoundId::DLL, 128, 4, std::nullopt, 4).applicable);
  EXPECT_TRUE(ev(BoundId::DLL, 129, 4, std::nullopt, 4).applicable);
  EXPECT_FALSE(ev(BoundId::DLL, 500, 4, std::nullopt, 3).applicable);
  EXPECT_FALSE(ev(BoundId::SHIFTED, 6, 4, 2).applicable);
  EXPECT_TRUE(ev(BoundId::SHIFTED, 7, 4, 2).applicable);
  EXPECT_EQ(ev(BoundId::SHIFTED, 7, 4, 2).bound, 4);
  EXPECT_EQ(ev(BoundId::SHIFTED, 7, 4, 2).index, 7);
  EXPECT_FALSE(ev(BoundId::EKR, 5, 3, 1).applicable);
  EXPECT_TRUE(ev(BoundId::EKR, 6, 3, 1).applicable);
}

// Right-hand sides re-derived from the construction closed forms.
TEST(Evaluate, AgreesWithClosedForms) {
  for (int n = 5; n <= 40; ++n) {
    for (int k = 2; 2 * k < n && k <= 8; ++k) {
      EXPECT_EQ(ev(BoundId::D2, n, k).bound, closed_degree(ConstructionKind::h_ell, n, k, 2, 2));
      EXPECT_EQ(ev(BoundId::HZ, n, k).bound, closed_degree(ConstructionKind::star, n, k, 1, n));
      EXPECT_EQ(ev(BoundId::EKR, n, k, 1).bound, closed_form({ConstructionKind::star, n, k, 1}).size);
      EXPECT_EQ(ev(BoundId::HM, n, k).bound, closed_form({ConstructionKind::h_ell, n, k, k}).size);
      EXPECT_EQ(ev(BoundId::COR12, n, k).bound, closed_form({ConstructionKind::h_ell, n, k, k}).size - 1);
      if (k >= 3) {
        EXPECT_EQ(ev(BoundId::D4, n, k).bound, closed_degree(ConstructionKind::h_ell, n, k, 3, 4));
      }
      for (int ell = 2; ell <= k; ++ell) {
        const auto f87 = ev(BoundId::F87, n, k, std::nullopt, ell);
        EXPECT_EQ(f87.bound, closed_form({ConstructionKind::h_ell, n, k, ell}).size);
        if (n <= 14) {
          const auto built = build({ConstructionKind::h_ell, n, k, ell});
          EXPECT_EQ(*f87.condition_threshold, BigInt(degree_sequence(built).sorted[0]));
        }
        if (ell >= 4) {
          EXPECT_EQ(ev(BoundId::DLL, n, k, std::nullopt, ell).bound,
                    closed_degree(ConstructionKind::h_ell, n, k, ell, ell + 1));
        }
      }
      for (int t = 1; t < k; ++t) {
        // The t-intersecting bounds share C(n-t-1,k-t-1) = d_{k+1}(H(n,k,t)) - t.
        const BigInt want = closed_degree(ConstructionKind::h_nkt, n, k, t, k + 1) - t;
        EXPECT_EQ(ev(BoundId::TINT, n, k, t).bound, want);
        EXPECT_EQ(ev(BoundId::PROP51, n, k, t).bound, want);
        EXPECT_EQ(ev(BoundId::SHIFTED, n, k, t).bound, want);
        EXPECT_EQ(ev(BoundId::EKR, n, k, t).bound, binom(n - t, k - t));
      }
    }
  }
}

TEST(BoundIds, RoundTrip) {
  EXPECT_EQ(all_bound_ids().size(), 14u);
  for (BoundId id : all_bound_ids()) EXPECT_EQ(parse_bound_id(to_string(id)), id);
  EXPECT_FALSE(parse_bound_id("NOPE"));
}

TEST(Grid, ExpandsAffineRanges) {
  const auto pts = expand_grid("k=3..4,n=2k+1..2k+2");
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[0].at("k"), 3);
  EXPECT_EQ(pts[0].at("n"), 7);
  EXPECT_EQ(pts[3].at("k"), 4);
  EXPECT_EQ(pts[3].at("n"), 10);
  EXPECT_EQ(expand_grid("k=3..3,n=6k-9..6k+30").size(), 40u);
  const auto sq = expand_grid("t=2..2,k=3..3,n=(t+2)(t+1)/2*k^2..(t+2)(t+1)/2*k^2");
  ASSERT_EQ(sq.size(), 1u);
  EXPECT_EQ(sq[0].at("n"), 54);
  EXPECT_EQ(expand_grid("k=5..3").size(), 0u);
  EXPECT_EQ(expand_grid("n=-2..-1+3*(2-1)").size(), 5u);
}

TEST(Grid, RejectsMalformedSpecs) {
  EXPECT_THROW(expand_grid("k=3"), ParameterError);
  EXPECT_THROW(expand_grid("k=3..n"), ParameterError);
  EXPECT_THROW(expand_grid("kk=1..2"), ParameterError);
  EXPECT_THROW(expand_grid("k=1..2,k=1..2"), ParameterError);
  EXPECT_THROW(expand_grid("k=1..(2"), ParameterError);
  EXPECT_THROW(expand_grid("k=1..7/2"), ParameterError);
  EXPECT_THROW(expand_grid("k=1..2$"), ParameterError);
  EXPECT_THROW(inequality_sweep(SweepId::I41, "k=3..4"), ParameterError);
}

TEST(Sweep, DefaultGridsHaveNoViolations) {
  for (SweepId id : all_sweep_ids()) {
    const auto r = inequality_sweep(id, default_grid(id));
    EXPECT_TRUE(r.pass) << to_string(id);
    EXPECT_TRUE(r.violations.empty());
    EXPECT_GT(r.points_evaluated, 0u) << to_string(id);
    EXPECT_EQ(r.points_out_of_hypothesis, 0u) << to_string(id);
  }
}

TEST(Sweep, I41Range) {
  const auto r = inequality_sweep(SweepId::I41, "k=3..12,n=6k-9..6k+30");
  EXPECT_EQ(r.points_evaluated, 400u);
  EXPECT_TRUE(r.pass);
}

TEST(Sweep, PointsOutsideHypothesisAreNotViolations) {
  const auto r = inequality_sweep(SweepId::I41, "k=3..12,n=6k-12..6k-10");
  EXPECT_EQ(r.points_evaluated, 0u);
  EXPECT_EQ(r.points_out_of_hypothesis, 30u);
  EXPECT_TRUE(r.pass);
  const auto lh = inequality_sweep(SweepId::LvsH4, "k=10..10,n=28..29");
  EXPECT_EQ(lh.points_out_of_hypothesis, 2u);
}

TEST(Sweep, SinglePointExamples) {
  const auto lh4 = inequality_sweep(SweepId::LvsH4, "k=10..10,n=27..27");
  EXPECT_EQ(lh4.points_evaluated, 1u);
  EXPECT_TRUE(lh4.pass);
  const auto i53 = inequality_sweep(SweepId::I53, "t=1..1,k=3..3,r=3..3,n=27..27");
  EXPECT_EQ(i53.points_evaluated, 1u);
  EXPECT_TRUE(i53.pass);
}

// The L_3 / H_l comparisons flip exactly at the stated thresholds.
TEST(Sweep, CrossoverThresholdsAreTight) {
  for (int k = 4; k <= 16; ++k) {
    int n = 3 * k - 2;
    EXPECT_EQ(closed_degree(ConstructionKind::l_r, n, k, 3, 4),
              closed_degree(ConstructionKind::h_ell, n, k, 3, 4));
    n = 4 * k - 4;
    EXPECT_EQ(closed_degree(ConstructionKind::l_r, n, k, 3, 5),
              closed_degree(ConstructionKind::h_ell, n, k, 4, 5));
  }
}

TEST(SweepIds, RoundTrip) {
  for (SweepId id : all_sweep_ids()) EXPECT_EQ(parse_sweep_id(to_string(id)), id);
  EXPECT_FALSE(parse_sweep_id("I99"));
}
