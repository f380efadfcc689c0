#include "degree_forge/shadows.hpp"

#include <algorithm>
#include <unordered_set>

#include "degree_forge/constructions.hpp"
#include "degree_forge/errors.hpp"

namespace degree_forge {

namespace {

void collect_subsets(VertexSet s, int drop, int from_bit, std::unordered_set<VertexSet>& out) {
  if (drop == 0) {
    out.insert(s);
    return;
  }
  for (auto m = s.mask() >> from_bit; m != 0; m &= m - 1) {
    const int bit = std::countr_zero(m) + from_bit;
    collect_subsets(s.without(bit + 1), drop - 1, bit + 1, out);
  }
}

}  // namespace

UniformFamily shadow(const UniformFamily& family, int ell) {
  if (ell < 1 || ell >= family.k()) {
    throw ParameterError("shadow needs 1 <= ell < k, got ell=" + std::to_string(ell));
  }
  std::unordered_set<VertexSet> subsets;
  for (VertexSet s : family) collect_subsets(s, ell, 0, subsets);
  return UniformFamily::from_sets(family.n(), family.k() - ell,
                                  std::vector<VertexSet>(subsets.begin(), subsets.end()),
                                  family.ground());
}

std::uint64_t kk_min_shadow(int n, int k, std::uint64_t m, int ell) {
  if (n < 1 || n > kMaxGround || k < 1 || k > n) {
    throw ParameterError("kk_min_shadow needs 1 <= k <= n <= 64");
  }
  if (ell < 1 || ell >= k) throw ParameterError("kk_min_shadow needs 1 <= ell < k");
  if (BigInt(m) > binom(n, k)) throw ParameterError("kk_min_shadow needs m <= C(n,k)");
  const auto segment = UniformFamily::from_sets(n, k, colex_initial_segment(n, k, m));
  return shadow(segment, ell).size();
}

bool are_cross_intersecting(const UniformFamily& a, const UniformFamily& b) {
  for (VertexSet x : a) {
    for (VertexSet y : b) {
      if ((x & y).empty()) return false;
    }
  }
  return true;
}

CrossCheckReport cross_check(const UniformFamily& a, const UniformFamily& b) {
  if (a.n() != b.n()) throw ParameterError("cross pair must share the ground-set size");
  const int n = a.n();
  CrossCheckReport out;
  out.cross = are_cross_intersecting(a, b);
  if (!out.cross) return out;

  if (a.k() == b.k() && n > 2 * a.k()) {
    const int k = a.k();
    const BigInt cap = binom(n - 1, k - 1);
    const BigInt smaller = std::min(a.size(), b.size());
    bool ok = smaller <= cap;
    if (smaller == cap) {
      out.daykin_equality = true;
      // Equality forces A = B = the full star of some vertex.
      bool star = false;
      if (a == b && !a.empty()) {
        VertexSet common = VertexSet::full(n);
        for (VertexSet s : a) common = common & s;
        star = !common.empty() && BigInt(a.size()) == cap;
      }
      ok = ok && star;
    }
    out.daykin_ok = ok;
  }

  if (n >= a.k() + b.k()) {
    const auto la = UniformFamily::from_sets(n, a.k(), lex_initial_segment(n, a.k(), a.size()));
    const auto lb = UniformFamily::from_sets(n, b.k(), lex_initial_segment(n, b.k(), b.size()));
    out.lex_transfer_ok = are_cross_intersecting(la, lb);
  }
  return out;
}

std::vector<InequalityResult> cross_inequalities(const UniformFamily& a, const UniformFamily& b,
                                                 const CrossInequalityParams& params) {
  if (a.n() != b.n()) throw ParameterError("cross pair must share the ground-set size");
  const std::int64_t n = a.n();
  const std::int64_t ka = a.k();
  const std::int64_t kb = b.k();
  const BigInt size_a = a.size();
  const BigInt size_b = b.size();
  const bool cross = are_cross_intersecting(a, b);
  std::vector<InequalityResult> out;

  auto record = [&](std::string id, std::string p, bool applicable, const auto& lhs,
                    const auto& rhs) {
    InequalityResult r;
    r.id = std::move(id);
    r.params = std::move(p);
    r.applicable = applicable;
    r.lhs = to_string(lhs);
    r.rhs = to_string(rhs);
    r.pass = !applicable || lhs <= rhs;
    out.push_back(std::move(r));
  };

  // |A| + |B| <= C(n,a) when b = a+2, n >= 2a+2, |A| >= C(n-1,a-1)+C(n-2,a-2).
  {
    const bool hyp = cross && kb == ka + 2 && n >= 2 * ka + 2 &&
                     size_a >= binom(n - 1, ka - 1) + binom(n - 2, ka - 2);
    record("COR21", "", hyp, BigInt(size_a + size_b), binom(n, ka));
  }

  // |B| <= C(n-1,b-1) + C(n-d,b-d+1) when |A| >= sum_{2<=j<=d} C(n-j,a-2).
  {
    std::vector<std::int64_t> ds;
    if (params.d) {
      ds.push_back(*params.d);
    } else {
      for (std::int64_t d = 2; d <= kb + 1; ++d) ds.push_back(d);
    }
    for (std::int64_t d : ds) {
      BigInt threshold = 0;
      for (std::int64_t j = 2; j <= d; ++j) threshold += binom(n - j, ka - 2);
      const bool hyp = cross && n >= ka + kb && d >= 2 && d <= kb + 1 && size_a >= threshold;
      record("COR22a", "d=" + std::to_string(d), hyp, size_b,
             BigInt(binom(n - 1, kb - 1) + binom(n - d, kb - d + 1)));
    }
  }

  // |B| <= C(n,b) - C(n-l,b) when |A| >= C(n-l,a-l).
  for (std::int64_t l = 1; l <= ka; ++l) {
    const bool hyp = cross && n >= ka + kb && size_a >= binom(n - l, ka - l);
    record("COR22b", "l=" + std::to_string(l), hyp, size_b,
           BigInt(binom(n, kb) - binom(n - l, kb)));
  }

  // r|A| + |B| <= C(n,k) when a = b = k, |A| <= |B|, n >= (r+1)k.
  {
    std::int64_t r = params.r ? *params.r : (ka > 0 ? n / ka - 1 : 0);
    const bool hyp =
        cross && ka == kb && size_a <= size_b && r >= 1 && n >= (r + 1) * ka;
    record("LEM61", "r=" + std::to_string(r), hyp, BigInt(r * size_a + size_b), binom(n, ka));
  }

  // |A| + C(n-d,a)/C(n-d,b-d) |B| <= C(n,a) when |A| >= sum_{1<=j<=d} C(n-j,a-1), d < b.
  {
    std::vector<std::int64_t> ds;
    if (params.d) {
      ds.push_back(*params.d);
    } else {
      for (std::int64_t d = 1; d < kb; ++d) ds.push_back(d);
    }
    for (std::int64_t d : ds) {
      BigInt threshold = 0;
      for (std::int64_t j = 1; j <= d; ++j) threshold += binom(n - j, ka - 1);
      const BigInt den = binom(n - d, kb - d);
      const bool hyp =
          cross && n >= ka + kb && d >= 1 && d < kb && size_a >= threshold && den != 0;
      Rational lhs = Rational(size_a);
      if (den != 0) lhs += Rational(binom(n - d, ka), den) * Rational(size_b);
      record("LEM62", "d=" + std::to_string(d), hyp, lhs, Rational(binom(n, ka)));
    }
  }
  return out;
}

}  // namespace degree_forge
