#include "degree_forge/constructions.hpp"

#include <array>
#include <numeric>
#include <string>

#include "degree_forge/errors.hpp"

namespace degree_forge {

namespace {

struct KindName {
  ConstructionKind kind;
  std::string_view name;
};

constexpr std::array kKindNames{
    KindName{ConstructionKind::star, "star"},
    KindName{ConstructionKind::h_ell, "H_ell"},
    KindName{ConstructionKind::h_nkt, "H_nkt"},
    KindName{ConstructionKind::l_r, "L_r"},
    KindName{ConstructionKind::lex_segment, "lex_segment"},
    KindName{ConstructionKind::colex_segment, "colex_segment"},
    KindName{ConstructionKind::triangle, "triangle"},
};

[[noreturn]] void bad_param(const ConstructionSpec& spec, const std::string& range) {
  throw ParameterError(std::string(to_string(spec.kind)) + ": param " +
                       std::to_string(spec.param) + " violates " + range);
}

// Filters all k-subsets of [n] by a membership predicate.
template <class Pred>
UniformFamily filter_all(int n, int k, Pred pred) {
  std::vector<VertexSet> out;
  for (VertexSet s : all_k_sets(n, k)) {
    if (pred(s)) out.push_back(s);
  }
  return UniformFamily::from_sets(n, k, std::move(out));
}

}  // namespace

std::string_view to_string(ConstructionKind kind) {
  for (const auto& e : kKindNames) {
    if (e.kind == kind) return e.name;
  }
  return "?";
}

std::optional<ConstructionKind> parse_construction_kind(std::string_view name) {
  for (const auto& e : kKindNames) {
    if (e.name == name) return e.kind;
  }
  return std::nullopt;
}

void validate(const ConstructionSpec& spec) {
  const int n = spec.n;
  const int k = spec.k;
  if (n < 1 || n > kMaxGround || k < 1 || k > n) {
    throw ParameterError("construction needs 1 <= k <= n <= 64, got n=" + std::to_string(n) +
                         ", k=" + std::to_string(k));
  }
  const auto p = spec.param;
  switch (spec.kind) {
    case ConstructionKind::star:
      if (p < 1 || p > n) bad_param(spec, "1 <= x <= n");
      break;
    case ConstructionKind::h_ell:
      if (p < 2 || p > k) bad_param(spec, "2 <= ell <= k");
      if (p + 1 > n) bad_param(spec, "ell + 1 <= n");
      break;
    case ConstructionKind::h_nkt:
      if (p < 1 || p >= k) bad_param(spec, "1 <= t < k");
      if (k + 1 > n) bad_param(spec, "k + 1 <= n");
      break;
    case ConstructionKind::l_r:
      if (p < 1 || p > k) bad_param(spec, "1 <= r <= k");
      if (2 * p - 1 > n) bad_param(spec, "2r - 1 <= n");
      break;
    case ConstructionKind::lex_segment:
    case ConstructionKind::colex_segment:
      if (p < 0 || BigInt(p) > binom(n, k)) bad_param(spec, "0 <= m <= C(n,k)");
      break;
    case ConstructionKind::triangle:
      if (k < 2 || n < 3) {
        throw ParameterError("triangle needs k >= 2 and n >= 3");
      }
      break;
  }
}

std::vector<VertexSet> lex_initial_segment(int n, int k, std::uint64_t m) {
  std::vector<VertexSet> out;
  if (m == 0) return out;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 1);
  while (out.size() < m) {
    out.push_back(VertexSet::of(idx));
    int pos = k - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < k; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<VertexSet> colex_initial_segment(int n, int k, std::uint64_t m) {
  std::vector<VertexSet> out;
  if (m == 0) return out;
  const VertexSet::Mask limit = VertexSet::full(n).mask();
  VertexSet::Mask cur = VertexSet::full(k).mask();
  // Gosper's hack walks k-subsets in increasing numeric, i.e. colex, order.
  while (out.size() < m) {
    out.push_back(VertexSet::from_mask(cur));
    if (cur == (limit & ~(limit >> k))) break;  // top k vertices reached
    const VertexSet::Mask low = cur & (~cur + 1);
    const VertexSet::Mask ripple = cur + low;
    if (ripple == 0) break;
    cur = ripple | (((cur ^ ripple) >> 2) / low);
    if ((cur & ~limit) != 0) break;
  }
  return out;
}

UniformFamily build(const ConstructionSpec& spec) {
  validate(spec);
  const int n = spec.n;
  const int k = spec.k;
  const int p = static_cast<int>(spec.param);
  switch (spec.kind) {
    case ConstructionKind::star:
      return filter_all(n, k, [p](VertexSet s) { return s.contains(p); });
    case ConstructionKind::h_ell: {
      const VertexSet window = VertexSet::interval(2, p + 1);
      return filter_all(n, k, [window](VertexSet s) {
        return (s.contains(1) && !(s & window).empty()) || window.subset_of(s);
      });
    }
    case ConstructionKind::h_nkt: {
      const VertexSet core = VertexSet::interval(1, p);
      const VertexSet window = VertexSet::interval(p + 1, k + 1);
      const VertexSet top = VertexSet::interval(1, k + 1);
      return filter_all(n, k, [=](VertexSet s) {
        if (core.subset_of(s) && !(s & window).empty()) return true;
        // [k+1] \ {j} for j in [t]
        return s.subset_of(top) && !(top - s).empty() && (top - s).min() <= p;
      });
    }
    case ConstructionKind::l_r: {
      const VertexSet window = VertexSet::interval(1, 2 * p - 1);
      return filter_all(n, k, [=](VertexSet s) { return intersection_size(s, window) >= p; });
    }
    case ConstructionKind::triangle: {
      const VertexSet window = VertexSet::interval(1, 3);
      return filter_all(n, k, [=](VertexSet s) { return intersection_size(s, window) >= 2; });
    }
    case ConstructionKind::lex_segment:
      return UniformFamily::from_sets(
          n, k, lex_initial_segment(n, k, static_cast<std::uint64_t>(spec.param)));
    case ConstructionKind::colex_segment:
      return UniformFamily::from_sets(
          n, k, colex_initial_segment(n, k, static_cast<std::uint64_t>(spec.param)));
  }
  throw ParameterError("unknown construction kind");
}

ClosedForm closed_form(const ConstructionSpec& spec) {
  validate(spec);
  const std::int64_t n = spec.n;
  const std::int64_t k = spec.k;
  const std::int64_t p = spec.param;
  ClosedForm out;

  auto h_ell = [&](std::int64_t ell) {
    out.size = binom(n - 1, k - 1) - binom(n - ell - 1, k - 1) + binom(n - ell - 1, k - ell);
    const BigInt d = binom(n - 2, k - 2) + binom(n - ell - 1, k - ell);
    for (std::int64_t i = 2; i <= ell + 1; ++i) out.degree_profile[static_cast<int>(i)] = d;
  };

  switch (spec.kind) {
    case ConstructionKind::star:
      out.size = binom(n - 1, k - 1);
      out.degree_profile[1] = binom(n - 1, k - 1);
      for (std::int64_t i = 2; i <= n; ++i) {
        out.degree_profile[static_cast<int>(i)] = binom(n - 2, k - 2);
      }
      break;
    case ConstructionKind::h_ell:
      h_ell(p);
      break;
    case ConstructionKind::triangle:
      h_ell(2);
      break;
    case ConstructionKind::h_nkt: {
      out.size = binom(n - p, k - p) - binom(n - k - 1, k - p) + p;
      const BigInt d = binom(n - p - 1, k - p - 1) + p;
      for (std::int64_t i = p + 1; i <= k + 1; ++i) out.degree_profile[static_cast<int>(i)] = d;
      break;
    }
    case ConstructionKind::l_r: {
      const std::int64_t w = 2 * p - 1;
      for (std::int64_t j = p; j <= w; ++j) out.size += binom(w, j) * binom(n - w, k - j);
      BigInt d = 0;
      for (std::int64_t j = p - 1; j <= 2 * p - 2; ++j) {
        d += binom(2 * p - 2, j) * binom(n - w, k - j - 1);
      }
      for (std::int64_t i = 1; i <= w; ++i) out.degree_profile[static_cast<int>(i)] = d;
      break;
    }
    case ConstructionKind::lex_segment:
    case ConstructionKind::colex_segment:
      throw UnsupportedError(std::string(to_string(spec.kind)) + " has no closed form");
  }
  return out;
}

}  // namespace degree_forge
